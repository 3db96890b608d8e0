// Acceptance checks. One line per criterion; exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <complex>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hbell/bell_polynomial.hpp"
#include "hbell/dft.hpp"
#include "hbell/pauli.hpp"
#include "hbell/polytope.hpp"
#include "hbell/symmetry.hpp"
#include "hbell/violation.hpp"

using namespace hbell;
using cd = std::complex<double>;

namespace {

class Criterion {
 public:
  explicit Criterion(std::string label) : label_(std::move(label)) {}

  void require(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }

  bool report() const {
    const bool ok = failure_.empty();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << label_;
    if (!ok) std::cout << " -- " << failure_;
    if (!notes_.empty()) std::cout << " (" << notes_ << ")";
    std::cout << '\n';
    return ok;
  }

 private:
  std::string label_;
  std::string failure_;
  std::string notes_;
};

CycNum w(long long k) { return CycNum::root(3, k); }
cd wc(int k) { return std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0); }
const cd kZeta = std::polar(1.0, 2.0 * std::numbers::pi / 9.0);

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(10);
  s << x;
  return s.str();
}

DitFunction single_party_example() { return DitFunction::from_exponents(Params::make(3, 1), {1, 2, 2}); }
DitFunction two_party_example() { return DitFunction::from_exponents(Params::make(3, 2), {2, 1, 2, 1, 1, 0, 2, 0, 0}); }

BellPolynomial poly32(const std::map<std::pair<int, int>, int>& terms) {
  BellPolynomial poly{Params::make(3, 2), std::vector<CycNum>(9, CycNum(3))};
  for (const auto& [r, c] : terms) poly.coeffs[r.first + 3 * r.second] = CycNum::integer(3, c);
  return poly;
}

bool counts() {
  Criterion c("AC1 counts 27 / 19683 / 81 real / 243 orbits / 4 real orbits, distinct representatives, < 60 s");
  const auto p31 = Params::make(3, 1), p32 = Params::make(3, 2);
  c.require(enumerate_functions(p31).size() == 27, "enumerate (3,1) != 27");
  c.require(enumerate_functions(p32).size() == 19683, "enumerate (3,2) != 19683");

  const auto start = std::chrono::steady_clock::now();
  const auto table = classify_orbits(p32, GeneratorSet::standard(), kDefaultEnumerationLimit, 1);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.note("classification " + fmt(seconds) + " s");
  c.require(seconds < 60.0, "classification took " + fmt(seconds) + " s");
  c.require(table.real_total == 81, "real census " + std::to_string(table.real_total));
  c.require(table.orbits.size() == 243, "orbit count " + std::to_string(table.orbits.size()));
  c.require(table.real_orbit_count == 4, "real orbit count " + std::to_string(table.real_orbit_count));

  const std::vector reps{
      poly32({{{0, 0}, 9}}),
      poly32({{{0, 0}, 3}, {{0, 2}, -3}, {{1, 1}, 6}, {{1, 2}, 3}, {{2, 0}, -3}, {{2, 1}, 3}}),
      poly32({{{0, 1}, -3}, {{0, 2}, 3}, {{1, 0}, 3}, {{1, 2}, 6}, {{2, 0}, -3}, {{2, 1}, 3}}),
      poly32({{{0, 0}, 6}, {{0, 1}, -3}, {{0, 2}, -3}, {{1, 0}, 3}, {{1, 1}, 3}, {{1, 2}, 3}}),
  };
  std::map<std::uint32_t, std::size_t> seen;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto f = reps[i].generating_function();
    if (!f || !reps[i].is_real()) {
      c.require(false, "representative " + std::to_string(i + 1) + " is not a real element of H_{3,2}");
      continue;
    }
    const auto id = table.orbit_of[f->code()];
    if (auto it = seen.find(id); it != seen.end()) {
      SymmetryOp op = SymmetryOp::identity(p32);
      op.swaps = {true, false};
      op.shifts = {0, 1};
      const bool related = apply_symmetry(op, reps[it->second]) == reps[i];
      c.require(false, "representatives " + std::to_string(it->second + 1) + " and " + std::to_string(i + 1) +
                           " share orbit " + std::to_string(id) +
                           (related ? " (swap on party 1 composed with shift on party 2 maps one to the other: " +
                                          reps[it->second].to_string() + " -> " + reps[i].to_string() + ")"
                                    : ""));
    } else {
      seen.emplace(id, i);
    }
  }
  return c.report();
}

bool dft_fidelity() {
  Criterion c("AC2 exact H_3 and H_3 (x) H_3, H*H = D I, dft/idft round trip on F_{3,1}");
  const int h3[3][3] = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  const auto m3 = build_matrix(Params::make(3, 1));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c.require(m3(i, j) == w(h3[i][j]), "H_3 entry mismatch");
  const int h9[9][9] = {
      {0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 2, 0, 1, 2, 0, 1, 2}, {0, 2, 1, 0, 2, 1, 0, 2, 1},
      {0, 0, 0, 1, 1, 1, 2, 2, 2}, {0, 1, 2, 1, 2, 0, 2, 0, 1}, {0, 2, 1, 1, 0, 2, 2, 1, 0},
      {0, 0, 0, 2, 2, 2, 1, 1, 1}, {0, 1, 2, 2, 0, 1, 1, 2, 0}, {0, 2, 1, 2, 1, 0, 1, 0, 2}};
  const auto m9 = build_matrix(Params::make(3, 2));
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) c.require(m9(i, j) == w(h9[i][j]), "H_3 (x) H_3 entry mismatch");
  c.require(m3.conj_transpose() * m3 == CycMatrix::identity(3, 3).scaled(CycNum::integer(3, 3)), "H_3* H_3 != 3 I");
  c.require(m9.conj_transpose() * m9 == CycMatrix::identity(3, 9).scaled(CycNum::integer(3, 9)), "H_9* H_9 != 9 I");

  const auto p31 = Params::make(3, 1);
  std::size_t checked = 0;
  for (const auto& f : enumerate_functions(p31)) {
    c.require(idft(dft(f.values(), p31), p31) == f.values(), "round trip failed at code " + std::to_string(f.code()));
    ++checked;
  }
  c.note(std::to_string(checked) + " functions round-tripped");
  return c.report();
}

bool spectrum() {
  Criterion c("AC3 spectrum of (w, w^2, w^2) and its 3x3 quantum operator, exact");
  const auto f = single_party_example();
  const Spectrum expected{w(2) - w(0), w(1) - w(2), w(1) - w(2)};
  c.require(dft(f.values(), f.params()) == expected, "spectrum mismatch");
  const CycNum a = w(1) - w(2), b = w(2) - w(0), z = w(0) - w(1);
  const CycNum q[3][3] = {{a, b, z}, {a, z, b}, {b, b, b}};
  const auto built = build_q_exact(f);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c.require(built(i, j) == q[i][j], "operator entry mismatch");
  return c.report();
}

bool violation_values() {
  Criterion c("AC4 expectation 19/14, 1.53208, bound 1.532089, bound 3.0 attained by the GHZ-type state");
  const auto f1 = single_party_example();
  const auto q1 = build_q(f1);
  const double e1 = expectation(StateVector::normalized({1.0, 2.0, 3.0}), q1, -2.0 / 3.0);
  c.require(std::abs(e1 - 19.0 / 14.0) <= 1e-12, "(1,2,3) state gives " + fmt(e1));
  const auto s2 = StateVector::normalized({44.0 + 50.0 * wc(1), 76.0 + 9.0 * wc(1), 143.0 + 17.0 * wc(1)});
  const double e2 = expectation(s2, q1, -2.0 / 3.0);
  c.require(std::abs(e2 - 1.53208) <= 5e-5, "explicit state gives " + fmt(e2));
  const double b1 = violation_bound(f1, Convention::regauged).value;
  c.require(std::abs(b1 - 1.532089) <= 1e-4, "bound at (3,1) " + fmt(b1));

  const auto f2 = two_party_example();
  const double b2 = violation_bound(f2, Convention::regauged).value;
  c.require(std::abs(b2 - 3.0) <= 1e-6, "bound at (3,2) " + fmt(b2));
  std::vector<cd> amps(9);
  amps[1] = amps[3] = 1.0;
  amps[8] = wc(1);
  const double e3 = expectation(StateVector::normalized(amps), build_q(f2), -2.0 / 9.0);
  c.require(std::abs(e3 - 3.0) <= 1e-9, "state at (3,2) gives " + fmt(e3));
  c.note("19/14 err " + fmt(std::abs(e1 - 19.0 / 14.0)) + ", explicit " + fmt(e2) + ", bounds " + fmt(b1) + " / " + fmt(b2));
  return c.report();
}

bool certificates() {
  Criterion c("AC5 eigenvalue certificates |det(Q - lambda I)| <= 1e-6 ||Q||^dim");
  const auto q1 = build_q(single_party_example());
  for (int k = 0; k < 3; ++k) {
    const auto cert = eigenvalue_certificate(q1, -3.0 * kZeta * wc(k));
    c.require(cert.holds, "(3,1) lambda index " + std::to_string(k) + " residual " + fmt(cert.residual));
  }
  const auto q2 = build_q(two_party_example());
  for (cd lambda : {9.0 * (1.0 - wc(1)), 9.0 * (wc(2) - 1.0), 9.0 * (wc(1) - wc(2)), cd(0.0)}) {
    const auto cert = eigenvalue_certificate(q2, lambda);
    c.require(cert.holds, "(3,2) lambda " + fmt(lambda.real()) + "+" + fmt(lambda.imag()) + "i residual " +
                              fmt(cert.residual));
  }
  return c.report();
}

bool facets() {
  Criterion c("AC6 every facet <= 1 at all vertices and tight; 6 saturating vertices each at (3,1)");
  for (int n : {1, 2}) {
    const auto p = Params::make(3, n);
    std::vector<CorrelationVector> points;
    for (const auto& v : vertices(p)) points.push_back(vertex_vector(v, p));
    for (const auto& f : enumerate_functions(p)) {
      const auto facet = facet_vector(f);
      double best = -1e9;
      int saturated = 0;
      for (const auto& x : points) {
        const double value = evaluate(facet, x);
        c.require(value <= 1 + 1e-9, "facet " + std::to_string(f.code()) + " exceeds 1 at a vertex");
        best = std::max(best, value);
        saturated += std::abs(value - 1.0) <= 1e-9;
      }
      c.require(std::abs(best - 1.0) <= 1e-9, "facet " + std::to_string(f.code()) + " not tight");
      if (n == 1) c.require(saturated == 6, "facet " + std::to_string(f.code()) + " saturated by " + std::to_string(saturated));
    }
  }
  return c.report();
}

bool lhv_soundness() {
  Criterion c("AC7 1000 local mixtures pass membership; a quantum point fails at the violation value");
  const auto p = Params::make(3, 1);
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> digit(0, 2), size(1, 8);
  std::exponential_distribution<double> expo(1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<LhvStrategy> mix(size(rng));
    double total = 0.0;
    for (auto& s : mix) {
      s.a = {digit(rng)};
      s.b = {digit(rng)};
      s.weight = expo(rng);
      total += s.weight;
    }
    for (auto& s : mix) s.weight /= total;
    const auto report = membership(lhv_sample(mix, p), p);
    c.require(report.verdict != Verdict::outside, "mixture " + std::to_string(trial) + " reported outside");
  }
  const auto bound = violation_bound(single_party_example(), Convention::regauged);
  const auto report = membership(quantum_correlations(bound.state, p), p);
  c.require(report.verdict == Verdict::outside, "quantum point not outside");
  c.require(std::abs(report.worst_value - 1.532089) <= 1e-4, "worst value " + fmt(report.worst_value));
  c.note("quantum worst value " + fmt(report.worst_value) + " at facet code " + std::to_string(report.worst_code));
  return c.report();
}

bool pauli() {
  Criterion c("AC8 ZX = wXZ, X^d = Z^d = I, XZ^k spectra, power identity for d in {2,3,5}");
  for (int d : {2, 3, 5}) {
    const auto x = pauli_x(d), z = pauli_z(d);
    const cd omega = std::polar(1.0, 2.0 * std::numbers::pi / d);
    const auto tag = " (d=" + std::to_string(d) + ")";
    c.require(max_abs_diff(z * x, omega * (x * z)) <= 1e-12, "commutation" + tag);
    c.require(max_abs_diff(x.pow(d), ComplexMatrix::identity(d)) <= 1e-12, "X order" + tag);
    c.require(max_abs_diff(z.pow(d), ComplexMatrix::identity(d)) <= 1e-12, "Z order" + tag);
    for (int k = 0; k < d; ++k) {
      const auto u = x * z.pow(k);
      for (const auto& lambda : xz_eigenvalues(d, k)) {
        ComplexMatrix shifted = u;
        for (int i = 0; i < d; ++i) shifted(i, i) -= lambda;
        c.require(std::abs(determinant(shifted)) <= 1e-12, "XZ^" + std::to_string(k) + " spectrum" + tag);
      }
      for (int e = 0; e < d; ++e) c.require(pauli_power_identity(d, k, e, 1e-12), "power identity" + tag);
    }
  }
  return c.report();
}

bool compact_form() {
  Criterion c("AC9 compact formula generates exactly the 27 polynomials at (3,1)");
  c.require(compact_form_check(), "sets differ");
  return c.report();
}

bool bowtie_completeness() {
  Criterion c("AC10 all bowtie combinations equal H_{d,n} at (2,2) and (3,1)");
  for (auto [d, n] : {std::pair{2, 2}, {3, 1}}) {
    const auto p = Params::make(d, n);
    std::vector<BellPolynomial> pool;
    for (const auto& f : enumerate_functions(p.with_parties(n - 1))) pool.push_back(polynomial_of(f));
    std::set<std::vector<CycNum>> generated, enumerated;
    std::vector<std::size_t> pick(d, 0);
    while (true) {
      std::vector<BellPolynomial> parts;
      for (auto i : pick) parts.push_back(pool[i]);
      generated.insert(bowtie(parts).coeffs);
      std::size_t pos = 0;
      while (pos < pick.size() && ++pick[pos] == pool.size()) pick[pos++] = 0;
      if (pos == pick.size()) break;
    }
    for (const auto& f : enumerate_functions(p)) enumerated.insert(polynomial_of(f).coeffs);
    c.require(generated == enumerated, "sets differ at (" + std::to_string(d) + "," + std::to_string(n) + ")");
  }
  return c.report();
}

}  // namespace

int main() {
  int failures = 0;
  for (auto check : {counts, dft_fidelity, spectrum, violation_values, certificates, facets, lhv_soundness, pauli,
                     compact_form, bowtie_completeness})
    failures += !check();
  std::cout << (10 - failures) << "/10 criteria pass\n";
  return failures;
}
