#include "hbell/pauli.hpp"

#include <stdexcept>

#include "hbell/params.hpp"
#include "hbell/polytope.hpp"

namespace hbell {
namespace {

void require_order(int d) {
  if (d < 2 || d > kMaxOrder) throw std::invalid_argument("Pauli operators need 2 <= d <= 64");
}

int mod(long long k, int d) {
  long long r = k % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

CycMatrix exact_pow(const CycMatrix& m, int e) {
  CycMatrix out = CycMatrix::identity(m.order(), m.dim());
  for (int i = 0; i < e; ++i) out = out * m;
  return out;
}

}  // namespace

CycMatrix pauli_x_exact(int d) {
  require_order(d);
  CycMatrix x(d, static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) x((i + 1) % d, i) = CycNum::integer(d, 1);
  return x;
}

CycMatrix pauli_z_exact(int d) {
  require_order(d);
  CycMatrix z(d, static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) z(i, i) = CycNum::root(d, i);
  return z;
}

ComplexMatrix pauli_x(int d) { return ComplexMatrix::from(pauli_x_exact(d)); }
ComplexMatrix pauli_z(int d) { return ComplexMatrix::from(pauli_z_exact(d)); }

CycMatrix monomial_operator_exact(int d, int r) {
  if (r < 0 || r >= d) throw std::invalid_argument("monomial index out of [0, d)");
  return exact_pow(pauli_x_exact(d), d - 1 - r) * exact_pow(pauli_z_exact(d), r);
}

std::vector<std::complex<double>> xz_eigenvalues(int d, int k) {
  require_order(d);
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const std::complex<double> base = (d % 2 == 0 && k % 2 == 1) ? rho(d) : std::complex<double>{1.0, 0.0};
  std::vector<std::complex<double>> out;
  for (int j = 0; j < d; ++j) out.push_back(base * root_of_unity(d, j));
  return out;
}

bool pauli_power_identity(int d, int k, int e, double tolerance) {
  require_order(d);
  if (k < 0 || e < 0) throw std::invalid_argument("k and e must be non-negative");
  const ComplexMatrix x = pauli_x(d);
  const ComplexMatrix z = pauli_z(d);
  const ComplexMatrix lhs = (x * z.pow(static_cast<unsigned>(k))).pow(static_cast<unsigned>(e));
  const long long phase = static_cast<long long>(k) * e * (e - 1) / 2;
  const ComplexMatrix rhs =
      root_of_unity(d, phase) * (x.pow(static_cast<unsigned>(e)) * z.pow(static_cast<unsigned>(k * e)));
  return max_abs_diff(lhs, rhs) <= tolerance;
}

MeasurementPlan measurement_plan(int d, int r) {
  if (!is_prime(d)) throw std::invalid_argument("measurement plans require prime d");
  if (r < 0 || r >= d) throw std::invalid_argument("r must lie in [0, d)");
  MeasurementPlan plan;
  plan.phase = CycNum::integer(d, 1);
  if (r == d - 1) {
    plan.z_branch = true;
    plan.power = d - 1;
    return plan;
  }
  plan.power = d - 1 - r;
  // d prime, so d-1-r is invertible mod d; r = 0 forces k = 0 (measure X).
  for (int k = 0; k < d; ++k) {
    if (mod(static_cast<long long>(k) * plan.power, d) == r) {
      plan.k = k;
      break;
    }
  }
  plan.phase = CycNum::root(d, -static_cast<long long>(plan.k) * (r + 1) * (r + 2) / 2);
  return plan;
}

CycMatrix plan_operator(int d, const MeasurementPlan& plan) {
  if (plan.z_branch) return pauli_z_exact(d);
  return pauli_x_exact(d) * exact_pow(pauli_z_exact(d), plan.k);
}

}  // namespace hbell
