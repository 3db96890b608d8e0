#include "hbell/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hbell/multi_index.hpp"
#include "hbell/parallel.hpp"

namespace hbell {
namespace {

void require_facets(const Params& p) {
  if (p.d() < 3) {
    throw std::invalid_argument("facet inequalities need d >= 3 (cos(pi/d) vanishes at d = 2)");
  }
}

void require_length(std::size_t len, const Params& p) {
  if (len != p.D()) {
    throw std::invalid_argument("correlation vector has length " + std::to_string(len) +
                                ", expected D = " + std::to_string(p.D()));
  }
}

}  // namespace

std::string to_string(Convention c) { return c == Convention::raw ? "raw" : "regauged"; }

Convention parse_convention(const std::string& name) {
  if (name == "raw") return Convention::raw;
  if (name == "regauged") return Convention::regauged;
  throw std::invalid_argument("unknown convention '" + name + "' (expected raw or regauged)");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::inside: return "inside";
    case Verdict::boundary: return "boundary";
    case Verdict::outside: return "outside";
  }
  return "?";
}

std::complex<double> rho(int d) { return std::polar(1.0, std::numbers::pi / d); }

std::vector<std::complex<double>> hull_u_dual_vertices(int d) {
  if (d < 3) throw std::invalid_argument("the dual of conv(U) is bounded only for d >= 3");
  const double scale = 1.0 / std::cos(std::numbers::pi / d);
  std::vector<std::complex<double>> out;
  for (int k = 0; k < d; ++k) out.push_back(scale * std::polar(1.0, (2.0 * k + 1.0) * std::numbers::pi / d));
  return out;
}

std::complex<double> facet_prefactor(const Params& p, Convention convention) {
  require_facets(p);
  const double D = static_cast<double>(p.D());
  if (convention == Convention::regauged) {
    if (p.d() != 3) throw std::invalid_argument("the regauged convention is defined for d = 3 only");
    return {-2.0 / D, 0.0};
  }
  return rho(p.d()) / (D * std::cos(std::numbers::pi / p.d()));
}

FacetVector facet_vector(const DitFunction& f, Convention convention) {
  const Params& p = f.params();
  FacetVector facet{f, polynomial_of(f).coeffs, convention, facet_prefactor(p, convention), {}};
  facet.beta.reserve(p.D());
  for (const auto& c : facet.spectrum) facet.beta.push_back(std::conj(facet.prefactor * c.to_complex()));
  return facet;
}

double evaluate(const FacetVector& facet, std::span<const std::complex<double>> xi) {
  require_length(xi.size(), facet.f.params());
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t r = 0; r < xi.size(); ++r) acc += std::conj(facet.beta[r]) * xi[r];
  return acc.real();
}

std::vector<Vertex> vertices(const Params& p, std::size_t limit) {
  if (p.D() > limit / static_cast<std::size_t>(p.d())) {
    throw LimitError("d*D = " + std::to_string(p.d()) + "*" + std::to_string(p.D()) +
                     " vertices exceed the limit " + std::to_string(limit));
  }
  std::vector<Vertex> out;
  out.reserve(p.D() * static_cast<std::size_t>(p.d()));
  for (int u = 0; u < p.d(); ++u) {
    for (std::size_t r = 0; r < p.D(); ++r) out.push_back({u, r});
  }
  return out;
}

CorrelationVector vertex_vector(const Vertex& v, const Params& p) {
  const IndexTable idx(p);
  CorrelationVector out(p.D());
  for (std::size_t s = 0; s < p.D(); ++s) out[s] = root_of_unity(p.d(), v.phase + idx.dot(v.r, s));
  return out;
}

std::vector<double> facet_values(std::span<const std::complex<double>> xi, const Params& p,
                                 std::uint64_t limit, unsigned parallelism) {
  require_facets(p);
  require_length(xi.size(), p);
  p.require_enumerable(limit);
  const std::uint64_t count = *p.function_count();
  // sum_r fhat(r) xi_r = sum_s f(s) xihat(s), with xihat = DFT(xi).
  const ComplexVector xihat = dft(xi, p);
  const std::complex<double> c = facet_prefactor(p, Convention::raw);
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(p.d()));
  for (int k = 0; k < p.d(); ++k) roots[k] = c * root_of_unity(p.d(), k);
  std::vector<double> values(count);
  const std::size_t D = p.D();
  const auto d = static_cast<std::uint64_t>(p.d());
  parallel_for(count, parallelism, [&](std::size_t code) {
    std::uint64_t rest = code;
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t s = D; s-- > 0;) {
      acc += roots[rest % d] * xihat[s];
      rest /= d;
    }
    values[code] = acc.real();
  });
  return values;
}

MembershipReport membership(std::span<const std::complex<double>> xi, const Params& p,
                            std::uint64_t limit, unsigned parallelism, double tolerance) {
  require_length(xi.size(), p);
  for (const auto& x : xi) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()) || std::abs(x) > 1.0 + 1e-9) {
      throw std::invalid_argument("correlation entries must be finite with modulus <= 1");
    }
  }
  const auto values = facet_values(xi, p, limit, parallelism);
  // Values within kTieWidth of the maximum count as ties; the smallest code wins.
  constexpr double kTieWidth = 1e-12;
  MembershipReport report;
  report.worst_value = *std::max_element(values.begin(), values.end());
  for (std::uint64_t code = 0; code < values.size(); ++code) {
    if (values[code] >= report.worst_value - kTieWidth) {
      report.worst_code = code;
      break;
    }
  }
  if (report.worst_value > 1.0 + tolerance) {
    report.verdict = Verdict::outside;
  } else if (report.worst_value >= 1.0 - tolerance) {
    report.verdict = Verdict::boundary;
  } else {
    report.verdict = Verdict::inside;
  }
  return report;
}

CorrelationVector deterministic_correlations(const LhvStrategy& s, const Params& p) {
  const auto n = static_cast<std::size_t>(p.n());
  if (s.a.size() != n || s.b.size() != n) throw std::invalid_argument("strategy does not match n");
  const IndexTable idx(p);
  CorrelationVector out(p.D());
  for (std::size_t r = 0; r < p.D(); ++r) {
    long long e = 0;
    for (int i = 0; i < p.n(); ++i) {
      const int ri = idx.digit(r, i);
      e += static_cast<long long>(p.d() - 1 - ri) * s.a[i] + static_cast<long long>(ri) * s.b[i];
    }
    out[r] = root_of_unity(p.d(), e);
  }
  return out;
}

CorrelationVector lhv_sample(std::span<const LhvStrategy> strategies, const Params& p) {
  if (strategies.empty()) throw std::invalid_argument("need at least one strategy");
  double total = 0.0;
  for (const auto& s : strategies) {
    if (!(s.weight >= 0.0)) throw std::invalid_argument("strategy weights must be non-negative");
    total += s.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("strategy weights must sum to 1");
  CorrelationVector out(p.D());
  for (const auto& s : strategies) {
    const auto v = deterministic_correlations(s, p);
    for (std::size_t r = 0; r < p.D(); ++r) out[r] += s.weight * v[r];
  }
  return out;
}

bool dft_duality_holds(const DitFunction& f, double tolerance) {
  const Params& p = f.params();
  const FacetVector facet = facet_vector(f, Convention::raw);
  const std::complex<double> scale = rho(p.d()) / std::cos(std::numbers::pi / p.d());
  ComplexVector corner(p.D());
  for (std::size_t s = 0; s < p.D(); ++s) corner[s] = scale * root_of_unity(p.d(), f.exponent(s));
  const ComplexVector image = dft(corner, p);
  const double inv_D = 1.0 / static_cast<double>(p.D());
  for (std::size_t r = 0; r < p.D(); ++r) {
    if (std::abs(facet.beta[r] - std::conj(inv_D * image[r])) > tolerance) return false;
  }
  return true;
}

bool dft_duality_check(const Params& p, std::uint64_t limit) {
  for (const auto& f : enumerate_functions(p, limit)) {
    if (!dft_duality_holds(f)) return false;
  }
  return true;
}

double werner_wolf_value(const DitFunction& f, std::span<const std::complex<double>> xi) {
  const Params& p = f.params();
  if (p.d() != 2) throw std::invalid_argument("the dichotomic bound applies to d = 2 only");
  require_length(xi.size(), p);
  const auto poly = polynomial_of(f);
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t r = 0; r < xi.size(); ++r) acc += poly.coeffs[r].to_complex() * xi[r];
  return std::abs(acc) / static_cast<double>(p.D());
}

}  // namespace hbell
