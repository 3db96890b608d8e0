#pragma once

// Generalized Pauli (clock and shift) operators in dimension d:
//   X = sum_i |i+1 mod d><i|,   Z = sum_i w^i |i><i|,   ZX = w XZ.

#include <complex>
#include <vector>

#include "hbell/complex_matrix.hpp"
#include "hbell/cyc_matrix.hpp"
#include "hbell/cyclotomic.hpp"

namespace hbell {

ComplexMatrix pauli_x(int d);
ComplexMatrix pauli_z(int d);
CycMatrix pauli_x_exact(int d);
CycMatrix pauli_z_exact(int d);

/// X^{d-1-r} Z^r, the single-party observable standing in for A^{d-1-r} B^r.
CycMatrix monomial_operator_exact(int d, int r);

/// Spectrum of X Z^k in closed form: the w^j, or rho w^j when d is even and
/// k is odd.
std::vector<std::complex<double>> xz_eigenvalues(int d, int k);

/// (X Z^k)^e == w^{k e (e-1) / 2} X^e Z^{k e}, entrywise within `tolerance`.
bool pauli_power_identity(int d, int k, int e, double tolerance = 1e-12);

/// How to obtain outcomes of X^{d-1-r} Z^r from a single generalized Pauli
/// measurement: measure Z (z_branch) or X Z^k, raise the outcome to `power`
/// and multiply by `phase`. Then phase * O^power == X^{d-1-r} Z^r.
struct MeasurementPlan {
  bool z_branch = false;
  int k = 0;
  int power = 1;
  CycNum phase{2};
};

/// Requires prime d and 0 <= r < d.
MeasurementPlan measurement_plan(int d, int r);

/// The measured operator of a plan: Z or X Z^k.
CycMatrix plan_operator(int d, const MeasurementPlan& plan);

}  // namespace hbell
