#include "hbell/complex_matrix.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hbell {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from(const CycMatrix& m) {
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j).to_complex();
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const cplx aik = (*this)(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < dim_; ++j) out(i, j) += aik * other(k, j);
    }
  }
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= other.a_[k];
  return *this;
}

ComplexMatrix operator*(cplx s, ComplexMatrix m) {
  for (auto& x : m.a_) x *= s;
  return m;
}

std::vector<cplx> ComplexMatrix::apply(std::span<const cplx> v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
  std::vector<cplx> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    cplx acc{};
    for (std::size_t j = 0; j < dim_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

ComplexMatrix ComplexMatrix::kron(const ComplexMatrix& other) const {
  const std::size_t m = other.dim_;
  ComplexMatrix out(dim_ * m);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const cplx a = (*this)(i, j);
      if (a == cplx{}) continue;
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l) out(i * m + k, j * m + l) = a * other(k, l);
      }
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::pow(unsigned e) const {
  ComplexMatrix result = identity(dim_);
  ComplexMatrix base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
  }
  return out;
}

double ComplexMatrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) row += std::abs((*this)(i, j));
    best = std::max(best, row);
  }
  return best;
}

double ComplexMatrix::norm_frobenius() const {
  double acc = 0.0;
  for (const auto& x : a_) acc += std::norm(x);
  return std::sqrt(acc);
}

double ComplexMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  }
  return worst;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
  return worst;
}

}  // namespace hbell
