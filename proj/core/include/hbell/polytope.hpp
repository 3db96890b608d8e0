#pragma once

// Geometry of the classical (local realistic) domain: the polytope spanned by
// the d*D vectors u*xi_r, xi_r = (w^{r.s})_s, and its facets
//   Re< beta_f, xi > <= 1,   beta_f = conj(c fhat),   c = rho / (D cos(pi/d)).

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hbell/bell_polynomial.hpp"
#include "hbell/dft.hpp"
#include "hbell/params.hpp"

namespace hbell {

/// Expectations E(a^r) of the monomials, indexed by the rank of r.
using CorrelationVector = std::vector<std::complex<double>>;

/// Normalization of the facet inequalities. `regauged` (d = 3 only) uses the
/// real prefactor -2/3^n, which is the raw inequality of w*f.
enum class Convention { raw, regauged };

std::string to_string(Convention c);
Convention parse_convention(const std::string& name);

/// rho = exp(i pi / d).
std::complex<double> rho(int d);

/// Vertices exp((2k+1) i pi / d) / cos(pi/d) of the dual of conv(U); d >= 3.
std::vector<std::complex<double>> hull_u_dual_vertices(int d);

/// c for the given convention; throws for d < 3 and for regauged with d != 3.
std::complex<double> facet_prefactor(const Params& p, Convention convention);

struct FacetVector {
  DitFunction f;
  Spectrum spectrum;                  // exact fhat
  Convention convention = Convention::raw;
  std::complex<double> prefactor;     // c
  ComplexVector beta;                 // conj(c fhat)
};

FacetVector facet_vector(const DitFunction& f, Convention convention = Convention::raw);

/// Re< beta, xi > = Re(c sum_r fhat(r) xi_r).
double evaluate(const FacetVector& facet, std::span<const std::complex<double>> xi);

/// u xi_r with u = w^phase.
struct Vertex {
  int phase = 0;
  std::size_t r = 0;
};

std::vector<Vertex> vertices(const Params& p, std::size_t limit = kDefaultMaxDimension);
CorrelationVector vertex_vector(const Vertex& v, const Params& p);

enum class Verdict { inside, boundary, outside };
std::string to_string(Verdict v);

inline constexpr double kMembershipTolerance = 1e-9;

struct MembershipReport {
  Verdict verdict = Verdict::inside;
  std::uint64_t worst_code = 0;   // function code of the maximizing facet
  double worst_value = 0.0;
};

/// Scans all d^D facets (raw convention). Values within 1e-12 of the
/// maximum are ties and go to the smallest code.
MembershipReport membership(std::span<const std::complex<double>> xi, const Params& p,
                            std::uint64_t limit = kDefaultEnumerationLimit,
                            unsigned parallelism = 1, double tolerance = kMembershipTolerance);

/// Values of every facet at xi, indexed by function code.
std::vector<double> facet_values(std::span<const std::complex<double>> xi, const Params& p,
                                 std::uint64_t limit = kDefaultEnumerationLimit,
                                 unsigned parallelism = 1);

/// One deterministic local strategy: party i outputs w^{a[i]} for A_i and
/// w^{b[i]} for B_i.
struct LhvStrategy {
  std::vector<int> a;
  std::vector<int> b;
  double weight = 1.0;
};

/// (a^r)_r for a deterministic strategy; equals u xi_r with u = prod a_i^{d-1}
/// and w^{r_i} = b_i / a_i.
CorrelationVector deterministic_correlations(const LhvStrategy& s, const Params& p);

/// Convex combination of deterministic strategies. Throws on negative
/// weights or weights not summing to 1 (tolerance 1e-12).
CorrelationVector lhv_sample(std::span<const LhvStrategy> strategies, const Params& p);

/// Checks beta_f = conj(D^{-1} DFT((rho / cos(pi/d)) f)) for one function.
bool dft_duality_holds(const DitFunction& f, double tolerance = 1e-12);
/// The same identity for every function of F_{d,n}.
bool dft_duality_check(const Params& p, std::uint64_t limit = kDefaultEnumerationLimit);

/// d = 2 only: |sum_r fhat(r) xi_r| / 2^n, bounded by 1 for local models.
/// This is the dichotomic bound, not one of the facet inequalities above.
double werner_wolf_value(const DitFunction& f, std::span<const std::complex<double>> xi);

}  // namespace hbell
