#pragma once

#include <cstddef>
#include <vector>

#include "hbell/cyclotomic.hpp"

namespace hbell {

/// Dense square matrix over Z[w], row-major.
class CycMatrix {
 public:
  CycMatrix(int d, std::size_t dim);

  static CycMatrix identity(int d, std::size_t dim);

  int order() const { return d_; }
  std::size_t dim() const { return dim_; }

  CycNum& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const CycNum& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  CycMatrix operator*(const CycMatrix& other) const;
  CycMatrix& operator+=(const CycMatrix& other);
  CycMatrix scaled(const CycNum& factor) const;
  CycMatrix conj_transpose() const;
  /// Kronecker product, this matrix's index most significant.
  CycMatrix kron(const CycMatrix& other) const;

  friend bool operator==(const CycMatrix&, const CycMatrix&) = default;

 private:
  int d_;
  std::size_t dim_;
  std::vector<CycNum> a_;
};

}  // namespace hbell
