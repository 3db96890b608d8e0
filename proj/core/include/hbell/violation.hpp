#pragma once

// Quantum counterparts of the Bell polynomials,
//   Q_f = sum_r fhat(r) (x)_i X^{d-1-r_i} Z^{r_i}   (party 1 leftmost),
// and the largest value of Re(c <psi|Q_f|psi>) over pure states.

#include <complex>
#include <vector>

#include "hbell/bell_polynomial.hpp"
#include "hbell/complex_matrix.hpp"
#include "hbell/cyc_matrix.hpp"
#include "hbell/polytope.hpp"

namespace hbell {

/// Pure state on (C^d)^{(x)n}; party 1 is the most significant digit of the
/// basis index.
class StateVector {
 public:
  /// Scales to unit norm; throws on a zero vector.
  static StateVector normalized(std::vector<cplx> amplitudes);

  std::span<const cplx> amplitudes() const { return amps_; }
  std::size_t dim() const { return amps_.size(); }

 private:
  explicit StateVector(std::vector<cplx> a) : amps_(std::move(a)) {}
  std::vector<cplx> amps_;
};

CycMatrix build_q_exact(const DitFunction& f, std::size_t dim_limit = kDefaultMatrixDimLimit);
ComplexMatrix build_q(const DitFunction& f, std::size_t dim_limit = kDefaultMatrixDimLimit);

/// Re(c <psi|Q|psi>).
double expectation(const StateVector& state, const ComplexMatrix& q, cplx c);

/// xi_r = <psi| (x)_i X^{d-1-r_i} Z^{r_i} |psi>, the quantum correlation vector.
CorrelationVector quantum_correlations(const StateVector& state, const Params& p);

struct ViolationBound {
  double value = 0.0;
  StateVector state = StateVector::normalized({1.0});
};

/// lambda_max of the Hermitian part of c Q_f and its eigenvector.
ViolationBound violation_bound(const DitFunction& f, Convention convention = Convention::raw,
                               std::size_t dim_limit = kDefaultMatrixDimLimit);

/// det(m) by Gaussian elimination with partial pivoting.
cplx determinant(ComplexMatrix m);

struct EigenCertificate {
  bool holds = false;
  double residual = 0.0;   // |det(Q - lambda I)|
  double threshold = 0.0;  // relative * ||Q||_inf^dim
};

/// Certifies that lambda is an eigenvalue of q via |det(q - lambda I)|.
EigenCertificate eigenvalue_certificate(const ComplexMatrix& q, cplx lambda, double relative = 1e-6);

}  // namespace hbell
