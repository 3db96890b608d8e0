#include "hbell/cyc_matrix.hpp"

#include <stdexcept>

namespace hbell {

CycMatrix::CycMatrix(int d, std::size_t dim) : d_(d), dim_(dim), a_(dim * dim, CycNum(d)) {}

CycMatrix CycMatrix::identity(int d, std::size_t dim) {
  CycMatrix m(d, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = CycNum::integer(d, 1);
  return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& other) const {
  if (other.dim_ != dim_ || other.d_ != d_) throw std::invalid_argument("CycMatrix shape mismatch");
  CycMatrix out(d_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const CycNum& aik = (*this)(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        const CycNum& bkj = other(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

CycMatrix& CycMatrix::operator+=(const CycMatrix& other) {
  if (other.dim_ != dim_ || other.d_ != d_) throw std::invalid_argument("CycMatrix shape mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
  return *this;
}

CycMatrix CycMatrix::scaled(const CycNum& factor) const {
  CycMatrix out = *this;
  for (auto& x : out.a_) x *= factor;
  return out;
}

CycMatrix CycMatrix::conj_transpose() const {
  CycMatrix out(d_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j).conj();
  }
  return out;
}

CycMatrix CycMatrix::kron(const CycMatrix& other) const {
  if (other.d_ != d_) throw std::invalid_argument("CycMatrix order mismatch");
  const std::size_t m = other.dim_;
  CycMatrix out(d_, dim_ * m);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const CycNum& a = (*this)(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l) out(i * m + k, j * m + l) = a * other(k, l);
      }
    }
  }
  return out;
}

}  // namespace hbell
