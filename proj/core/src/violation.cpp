#include "hbell/violation.hpp"

#include <cmath>
#include <stdexcept>

#include "hbell/hermitian_eigen.hpp"

namespace hbell {
namespace {

void require_dim(const Params& p, std::size_t dim_limit) {
  if (p.D() > dim_limit) {
    throw LimitError("operator dimension " + std::to_string(p.D()) + " exceeds the matrix limit " +
                     std::to_string(dim_limit));
  }
}

// Digits of a basis index, party 1 most significant.
std::vector<int> state_digits(std::size_t index, const Params& p) {
  std::vector<int> digits(static_cast<std::size_t>(p.n()));
  for (int i = p.n(); i-- > 0;) {
    digits[i] = static_cast<int>(index % p.d());
    index /= p.d();
  }
  return digits;
}

std::size_t state_index(const std::vector<int>& digits, const Params& p) {
  std::size_t index = 0;
  for (int x : digits) index = index * p.d() + static_cast<std::size_t>(x);
  return index;
}

// For monomial r, column j maps to row(j) with phase w^{r.j}:
// X^{d-1-r_i} Z^{r_i} |j_i> = w^{r_i j_i} |j_i + d - 1 - r_i>.
template <typename Visit>
void for_each_monomial_entry(const Params& p, Visit&& visit) {
  const int d = p.d();
  std::vector<int> rdig(static_cast<std::size_t>(p.n()));
  for (std::size_t r = 0; r < p.D(); ++r) {
    std::size_t x = r;
    for (int i = 0; i < p.n(); ++i) {
      rdig[i] = static_cast<int>(x % d);
      x /= d;
    }
    for (std::size_t col = 0; col < p.D(); ++col) {
      std::vector<int> j = state_digits(col, p);
      long long phase = 0;
      for (int i = 0; i < p.n(); ++i) {
        phase += static_cast<long long>(rdig[i]) * j[i];
        j[i] = (j[i] + d - 1 - rdig[i]) % d;
      }
      visit(r, state_index(j, p), col, phase);
    }
  }
}

}  // namespace

StateVector StateVector::normalized(std::vector<cplx> amplitudes) {
  double norm = 0.0;
  for (const auto& a : amplitudes) norm += std::norm(a);
  norm = std::sqrt(norm);
  if (!(norm > 0.0) || !std::isfinite(norm)) throw std::invalid_argument("state must be a non-zero finite vector");
  for (auto& a : amplitudes) a /= norm;
  return StateVector(std::move(amplitudes));
}

CycMatrix build_q_exact(const DitFunction& f, std::size_t dim_limit) {
  const Params& p = f.params();
  require_dim(p, dim_limit);
  const auto spectrum = polynomial_of(f).coeffs;
  CycMatrix q(p.d(), p.D());
  for_each_monomial_entry(p, [&](std::size_t r, std::size_t row, std::size_t col, long long phase) {
    q(row, col) += spectrum[r].times_root(phase);
  });
  return q;
}

ComplexMatrix build_q(const DitFunction& f, std::size_t dim_limit) {
  const Params& p = f.params();
  require_dim(p, dim_limit);
  const auto spectrum = polynomial_of(f).coeffs;
  std::vector<cplx> coeffs;
  coeffs.reserve(spectrum.size());
  for (const auto& c : spectrum) coeffs.push_back(c.to_complex());
  ComplexMatrix q(p.D());
  for_each_monomial_entry(p, [&](std::size_t r, std::size_t row, std::size_t col, long long phase) {
    q(row, col) += coeffs[r] * root_of_unity(p.d(), phase);
  });
  return q;
}

double expectation(const StateVector& state, const ComplexMatrix& q, cplx c) {
  if (state.dim() != q.dim()) throw std::invalid_argument("state and operator dimensions differ");
  const auto qpsi = q.apply(state.amplitudes());
  cplx acc{};
  for (std::size_t i = 0; i < qpsi.size(); ++i) acc += std::conj(state.amplitudes()[i]) * qpsi[i];
  return (c * acc).real();
}

CorrelationVector quantum_correlations(const StateVector& state, const Params& p) {
  if (state.dim() != p.D()) throw std::invalid_argument("state dimension does not match d^n");
  CorrelationVector xi(p.D());
  const auto amps = state.amplitudes();
  for_each_monomial_entry(p, [&](std::size_t r, std::size_t row, std::size_t col, long long phase) {
    xi[r] += std::conj(amps[row]) * root_of_unity(p.d(), phase) * amps[col];
  });
  return xi;
}

ViolationBound violation_bound(const DitFunction& f, Convention convention, std::size_t dim_limit) {
  const Params& p = f.params();
  const cplx c = facet_prefactor(p, convention);
  const ComplexMatrix q = build_q(f, dim_limit);
  const auto eig = hermitian_eigs((c * q).hermitian_part());
  std::vector<cplx> top(p.D());
  for (std::size_t k = 0; k < p.D(); ++k) top[k] = eig.vectors(k, 0);
  // Fix the global phase so the largest amplitude is real and positive.
  std::size_t lead = 0;
  for (std::size_t k = 1; k < top.size(); ++k) {
    if (std::abs(top[k]) > std::abs(top[lead]) + 1e-12) lead = k;
  }
  const cplx phase = std::conj(top[lead]) / std::abs(top[lead]);
  for (auto& a : top) a *= phase;
  return {eig.values.front(), StateVector::normalized(std::move(top))};
}

cplx determinant(ComplexMatrix m) {
  const std::size_t n = m.dim();
  cplx det{1.0, 0.0};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
    }
    if (m(pivot, col) == cplx{}) return {0.0, 0.0};
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(pivot, k), m(col, k));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const cplx factor = m(r, col) / m(col, col);
      if (factor == cplx{}) continue;
      for (std::size_t k = col; k < n; ++k) m(r, k) -= factor * m(col, k);
    }
  }
  return det;
}

EigenCertificate eigenvalue_certificate(const ComplexMatrix& q, cplx lambda, double relative) {
  ComplexMatrix shifted = q;
  for (std::size_t i = 0; i < q.dim(); ++i) shifted(i, i) -= lambda;
  EigenCertificate cert;
  cert.residual = std::abs(determinant(std::move(shifted)));
  cert.threshold = relative * std::pow(q.norm_inf(), static_cast<double>(q.dim()));
  cert.holds = cert.residual <= cert.threshold;
  return cert;
}

}  // namespace hbell
