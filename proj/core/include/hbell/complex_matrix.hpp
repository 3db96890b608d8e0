#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "hbell/cyc_matrix.hpp"

namespace hbell {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim = 0) : dim_(dim), a_(dim * dim) {}

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix from(const CycMatrix& m);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
  std::span<const cplx> data() const { return a_; }

  ComplexMatrix operator*(const ComplexMatrix& other) const;
  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix m);

  std::vector<cplx> apply(std::span<const cplx> v) const;
  ComplexMatrix adjoint() const;
  ComplexMatrix kron(const ComplexMatrix& other) const;
  /// Non-negative integer power.
  ComplexMatrix pow(unsigned e) const;
  /// (M + M^dagger) / 2.
  ComplexMatrix hermitian_part() const;

  /// Largest absolute row sum.
  double norm_inf() const;
  double norm_frobenius() const;
  /// max |M - M^dagger| entry.
  double hermiticity_defect() const;

 private:
  std::size_t dim_;
  std::vector<cplx> a_;
};

/// max |a_ij - b_ij|; infinity on a shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace hbell
