#include "hbell/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hbell {
namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr double kRelativeOffDiagonal = 1e-12;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) acc += std::norm(a(i, j));
    }
  }
  return std::sqrt(acc);
}

}  // namespace

HermitianEigen hermitian_eigs(const ComplexMatrix& m) {
  if (m.hermiticity_defect() > kHermitianTolerance) {
    throw std::invalid_argument("hermitian_eigs: matrix is not Hermitian");
  }
  const std::size_t n = m.dim();
  ComplexMatrix a = m.hermitian_part();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double target = kRelativeOffDiagonal * std::max(m.norm_frobenius(), 1e-300);

  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (sweep++ == kMaxSweeps) throw std::runtime_error("hermitian_eigs: Jacobi did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const cplx e = apq / mag;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx se = s * e;
        const cplx se_bar = s * std::conj(e);
        // A <- A J with J = [[c, s e], [-s conj(e), c]] on (p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp - se_bar * akq;
          a(k, q) = se * akp + c * akq;
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = c * vkp - se_bar * vkq;
          v(k, q) = se * vkp + c * vkq;
        }
        // A <- J^dagger A.
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk - se * aqk;
          a(q, k) = se_bar * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });
  HermitianEigen out{{}, ComplexMatrix(n), sweep};
  out.values.reserve(n);
  for (std::size_t col = 0; col < n; ++col) {
    out.values.push_back(a(order[col], order[col]).real());
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, col) = v(k, order[col]);
  }
  return out;
}

}  // namespace hbell
