#include "homlattice/matrix.hpp"

#include <algorithm>

#include "homlattice/errors.hpp"

namespace homlattice {

BinaryMatrix::BinaryMatrix(const std::vector<std::vector<int>>& rows) : BinaryMatrix(rows.size()) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw invalid_input("matrix is not square");
    for (std::size_t j = 0; j < n_; ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1) throw invalid_input("matrix entries must be 0 or 1");
      set(i, j, rows[i][j] == 1);
    }
  }
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BinaryMatrix BinaryMatrix::ones(std::size_t n) {
  BinaryMatrix m(n);
  std::fill(m.entries_.begin(), m.entries_.end(), 1);
  return m;
}

std::size_t BinaryMatrix::count_ones() const {
  return static_cast<std::size_t>(std::count(entries_.begin(), entries_.end(), 1));
}

}  // namespace homlattice
