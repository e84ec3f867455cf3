#include "homlattice/limits.hpp"

#include <atomic>
#include <string>

#include "homlattice/errors.hpp"

namespace homlattice {

namespace {
std::atomic<std::size_t> current_limit{default_pattern_limit};
}

std::size_t pattern_limit() { return current_limit.load(std::memory_order_relaxed); }

void set_pattern_limit(std::size_t limit) {
  if (limit == 0 || limit > max_pattern_limit)
    throw invalid_input("pattern limit must lie in [1, " + std::to_string(max_pattern_limit) + "]");
  current_limit.store(limit, std::memory_order_relaxed);
}

void check_pattern_size(std::size_t n, const char* what) {
  const auto limit = pattern_limit();
  if (n > limit)
    throw limit_exceeded(std::string(what) + ": " + std::to_string(n) +
                         " vertices exceeds the pattern limit of " + std::to_string(limit));
}

}  // namespace homlattice
