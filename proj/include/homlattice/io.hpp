#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "homlattice/basis.hpp"
#include "homlattice/graph.hpp"
#include "homlattice/matrix.hpp"

namespace homlattice::io {

// DIMACS-style graph: "c ..." comments, one "p edge <n> <m>" header, then m
// lines "e <u> <v>" with distinct 1-based endpoints and no repeated edge.
// Throws parse_error.
Graph parse_graph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);
std::string format_graph(const Graph& g);

// First line n, then n lines of n space-separated 0/1 entries.
BinaryMatrix parse_matrix(std::istream& in);
BinaryMatrix read_matrix_file(const std::filesystem::path& path);

// Nonnegative integer or "p/q".
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& value);

// Lines "<coeff> <restriction> <graph-path>"; blank lines and lines starting
// with '#' are skipped. Relative paths resolve against base_dir.
LinearCombination parse_manifest(std::istream& in, const std::filesystem::path& base_dir);
LinearCombination read_manifest_file(const std::filesystem::path& path);

}  // namespace homlattice::io
