#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace homlattice {

// Square matrix with entries in {0, 1}, row-major.
class BinaryMatrix {
public:
  BinaryMatrix() = default;
  explicit BinaryMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}
  // Throws invalid_input unless rows form a square 0/1 matrix.
  explicit BinaryMatrix(const std::vector<std::vector<int>>& rows);

  static BinaryMatrix identity(std::size_t n);
  static BinaryMatrix ones(std::size_t n);

  std::size_t size() const { return n_; }
  bool at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool value) { entries_[i * n_ + j] = value ? 1 : 0; }
  std::size_t count_ones() const;

private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> entries_;
};

}  // namespace homlattice
