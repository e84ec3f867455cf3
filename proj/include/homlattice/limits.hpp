#pragma once

#include <cstddef>

namespace homlattice {

// Upper bound on the vertex count of any graph handed to an operation that
// enumerates permutations, partitions or flats. Hosts are never bounded.
inline constexpr std::size_t default_pattern_limit = 12;

// Partitions are packed four bits per vertex, so no limit may exceed this.
inline constexpr std::size_t max_pattern_limit = 16;

std::size_t pattern_limit();

// Throws invalid_input if limit is 0 or above max_pattern_limit.
void set_pattern_limit(std::size_t limit);

// Throws limit_exceeded when n is above the current pattern limit.
void check_pattern_size(std::size_t n, const char* what);

}  // namespace homlattice
