#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fillcalc/rational.hpp"

namespace fillcalc {

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const noexcept { return n_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  /// Copy with the listed rows and the same columns removed. Indices must be distinct.
  IntMatrix without(const std::vector<std::size_t>& removed) const {
    std::vector<bool> drop(n_, false);
    for (auto r : removed) drop.at(r) = true;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n_; ++i)
      if (!drop[i]) keep.push_back(i);
    IntMatrix out(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j) out(i, j) = (*this)(keep[i], keep[j]);
    return out;
  }

  IntMatrix without(std::size_t removed) const { return without(std::vector<std::size_t>{removed}); }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> data_;
};

/// Fraction-free Gaussian elimination. The empty matrix has determinant 1.
inline Integer determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Tridiagonal matrix of a linear plumbing: framings on the diagonal, 1 between neighbours.
inline IntMatrix chain_matrix(const std::vector<std::int64_t>& framings) {
  IntMatrix m(framings.size());
  for (std::size_t i = 0; i < framings.size(); ++i) {
    m(i, i) = framings[i];
    if (i + 1 < framings.size()) m(i, i + 1) = m(i + 1, i) = 1;
  }
  return m;
}

}  // namespace fillcalc
