#include "homlattice/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "homlattice/errors.hpp"
#include "homlattice/restrictions.hpp"

namespace homlattice::io {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw parse_error("line " + std::to_string(line) + ": " + message);
}

std::size_t parse_unsigned(std::string_view token, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size() || token.empty())
    fail(line, std::string("expected a nonnegative integer for ") + what + ", got '" + std::string(token) + "'");
  return value;
}

std::vector<std::string> tokens_of(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t declared_edges = 0;
  Graph g;
  while (std::getline(in, text)) {
    ++line_no;
    const auto tokens = tokens_of(text);
    if (tokens.empty() || tokens.front() == "c") continue;
    if (tokens.front() == "p") {
      if (have_header) fail(line_no, "second 'p' header");
      if (tokens.size() != 4 || tokens[1] != "edge") fail(line_no, "header must read 'p edge <n> <m>'");
      const auto n = parse_unsigned(tokens[2], line_no, "vertex count");
      declared_edges = parse_unsigned(tokens[3], line_no, "edge count");
      g = Graph(n);
      have_header = true;
    } else if (tokens.front() == "e") {
      if (!have_header) fail(line_no, "edge before the 'p edge' header");
      if (tokens.size() != 3) fail(line_no, "edge line must read 'e <u> <v>'");
      const auto u = parse_unsigned(tokens[1], line_no, "endpoint");
      const auto v = parse_unsigned(tokens[2], line_no, "endpoint");
      if (u < 1 || v < 1 || u > g.num_vertices() || v > g.num_vertices())
        fail(line_no, "endpoint outside [1, " + std::to_string(g.num_vertices()) + "]");
      if (u == v) fail(line_no, "selfloop on vertex " + std::to_string(u));
      if (!g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)))
        fail(line_no, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    } else {
      fail(line_no, "unrecognised line '" + text + "'");
    }
  }
  if (!have_header) throw parse_error("missing 'p edge <n> <m>' header");
  if (g.num_edges() != declared_edges)
    throw parse_error("header declares " + std::to_string(declared_edges) + " edges but " +
                      std::to_string(g.num_edges()) + " were given");
  return g;
}

Graph read_graph_file(const std::filesystem::path& path) {
  auto in = open(path);
  try {
    return parse_graph(in);
  } catch (const parse_error& e) {
    throw parse_error(path.string() + ": " + e.what());
  }
}

std::string format_graph(const Graph& g) {
  if (g.has_any_loop()) throw invalid_input("graph files cannot carry selfloops");
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
  return out.str();
}

BinaryMatrix parse_matrix(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::size_t> numbers;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    auto tokens = tokens_of(text);
    if (tokens.empty()) continue;
    lines.push_back(std::move(tokens));
    numbers.push_back(line_no);
  }
  if (lines.empty()) throw parse_error("empty matrix file");
  if (lines.front().size() != 1) fail(numbers.front(), "first line must hold the dimension n");
  const auto n = parse_unsigned(lines.front().front(), numbers.front(), "dimension");
  if (n == 0) fail(numbers.front(), "dimension must be positive");
  if (lines.size() != n + 1)
    throw parse_error("expected " + std::to_string(n) + " matrix rows, found " + std::to_string(lines.size() - 1));
  std::vector<std::vector<int>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = lines[i + 1];
    if (row.size() != n) fail(numbers[i + 1], "row must have " + std::to_string(n) + " entries");
    for (const auto& t : row) {
      if (t != "0" && t != "1") fail(numbers[i + 1], "entries must be 0 or 1");
      rows[i].push_back(t == "1" ? 1 : 0);
    }
  }
  return BinaryMatrix(rows);
}

BinaryMatrix read_matrix_file(const std::filesystem::path& path) {
  auto in = open(path);
  try {
    return parse_matrix(in);
  } catch (const parse_error& e) {
    throw parse_error(path.string() + ": " + e.what());
  }
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  auto digits = [&](std::string_view part) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos)
      throw parse_error("bad coefficient '" + std::string(text) + "'");
    return Integer(std::string(part));
  };
  if (slash == std::string_view::npos) return Rational(digits(text));
  const auto den = digits(text.substr(slash + 1));
  if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  return Rational(digits(text.substr(0, slash)), den);
}

std::string format_rational(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

LinearCombination parse_manifest(std::istream& in, const std::filesystem::path& base_dir) {
  LinearCombination lc;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    const auto tokens = tokens_of(text);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;
    if (tokens.size() != 3) fail(line_no, "manifest line must read '<coeff> <restriction> <graph-path>'");
    Rational weight;
    Restriction tau = Restriction::independent_set();
    try {
      weight = parse_rational(tokens[0]);
      tau = Restriction::parse(tokens[1]);
    } catch (const invalid_input& e) {
      fail(line_no, e.what());
    }
    if (weight <= 0) fail(line_no, "coefficient must be positive");
    std::filesystem::path path = tokens[2];
    if (path.is_relative()) path = base_dir / path;
    lc.terms.push_back(LincombTerm{weight, read_graph_file(path), tau});
  }
  return lc;
}

LinearCombination read_manifest_file(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_manifest(in, path.parent_path());
}

}  // namespace homlattice::io
