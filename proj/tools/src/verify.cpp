#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "format.hpp"
#include "hbell/bell_polynomial.hpp"
#include "hbell/dft.hpp"
#include "hbell/hermitian_eigen.hpp"
#include "hbell/pauli.hpp"
#include "hbell/polytope.hpp"
#include "hbell/symmetry.hpp"
#include "hbell/violation.hpp"

namespace hbell::cli {
namespace {

constexpr std::uint64_t kSampleCount = 200;

struct Context {
  const RunConfig& config;
  Params params;
  bool enumerable;
  std::mt19937_64 rng;
};

// Either every code of F_{d,n} or a seeded sample of them.
std::vector<std::uint64_t> function_codes(Context& ctx, std::uint64_t samples = kSampleCount) {
  std::vector<std::uint64_t> codes;
  if (ctx.enumerable) {
    codes.resize(*ctx.params.function_count());
    std::iota(codes.begin(), codes.end(), 0);
    return codes;
  }
  for (std::uint64_t i = 0; i < samples; ++i) codes.push_back(i);
  return codes;
}

DitFunction function_at(Context& ctx, std::uint64_t code) {
  if (ctx.enumerable) return DitFunction::from_code(ctx.params, code);
  // Sampled mode: derive exponents from the seeded generator and the index.
  std::mt19937_64 local(ctx.config.seed * 0x9E3779B97F4A7C15ull + code);
  std::vector<int> e(ctx.params.D());
  for (auto& x : e) x = static_cast<int>(local() % static_cast<std::uint64_t>(ctx.params.d()));
  return DitFunction::from_exponents(ctx.params, std::move(e));
}

class Suite {
 public:
  Suite(std::string name, Context& ctx) : ctx_(ctx) {
    result_.name = std::move(name);
    result_.mode = ctx.enumerable ? "exhaustive" : "sampled";
  }

  /// Records one check; keeps the first failure as the witness.
  bool check(bool ok, const std::function<json()>& witness) {
    ++result_.checked;
    if (!ok && result_.status != SuiteStatus::fail) {
      result_.status = SuiteStatus::fail;
      result_.witness = witness();
    }
    return ok;
  }

  void skip(std::string note) {
    result_.status = SuiteStatus::skipped;
    result_.mode.clear();
    result_.note = std::move(note);
  }
  void mode(std::string m) { result_.mode = std::move(m); }
  SuiteResult result() const { return result_; }
  Context& ctx() { return ctx_; }

 private:
  Context& ctx_;
  SuiteResult result_;
};

json function_witness(const DitFunction& f) { return {{"f_exponents", exponents_json(f.exponents())}}; }

SuiteResult dft_direct_vs_fast(Context& ctx) {
  Suite s("dft.direct_vs_fast", ctx);
  const auto& p = ctx.params;
  const bool with_matrix = p.D() <= ctx.config.matrix_dim_limit;
  std::optional<CycMatrix> h;
  if (with_matrix) h = build_matrix(p, ctx.config.matrix_dim_limit);
  for (auto code : function_codes(ctx)) {
    const auto f = function_at(ctx, code);
    const auto values = f.values();
    const auto direct = dft(values, p);
    if (!s.check(direct == dft_fast(values, p), [&] { return function_witness(f); })) break;
    if (with_matrix) {
      bool same = true;
      for (std::size_t r = 0; r < p.D() && same; ++r) {
        CycNum acc(p.d());
        for (std::size_t t = 0; t < p.D(); ++t) acc += (*h)(r, t) * values[t];
        same = acc == direct[r];
      }
      if (!s.check(same, [&] { return function_witness(f); })) break;
    }
  }
  return s.result();
}

SuiteResult dft_unitarity(Context& ctx) {
  Suite s("dft.unitarity", ctx);
  const auto& p = ctx.params;
  if (p.D() > ctx.config.matrix_dim_limit) {
    s.skip("D exceeds the matrix limit");
    return s.result();
  }
  s.mode("exhaustive");
  const auto h = build_matrix(p, ctx.config.matrix_dim_limit);
  const auto expected = CycMatrix::identity(p.d(), p.D()).scaled(CycNum::integer(p.d(), static_cast<std::int64_t>(p.D())));
  s.check(h.conj_transpose() * h == expected, [] { return json{{"identity", "H^* H != D I"}}; });
  return s.result();
}

SuiteResult dft_round_trip(Context& ctx) {
  Suite s("dft.round_trip", ctx);
  for (auto code : function_codes(ctx)) {
    const auto f = function_at(ctx, code);
    const auto values = f.values();
    if (!s.check(idft(dft_fast(values, ctx.params), ctx.params) == values, [&] { return function_witness(f); })) break;
  }
  return s.result();
}

SuiteResult dft_spectrum_rules(Context& ctx) {
  Suite s("dft.spectrum_rules", ctx);
  s.mode("sampled");
  const auto& p = ctx.params;
  const IndexTable table(p);
  std::uniform_int_distribution<int> digit(0, p.d() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<CycNum> f;
    for (std::size_t k = 0; k < p.D(); ++k) f.push_back(CycNum::root(p.d(), digit(ctx.rng)));
    MultiIndex delta{std::vector<int>(static_cast<std::size_t>(p.n()))};
    for (auto& x : delta.digits) x = digit(ctx.rng);
    std::vector<int> sigma(static_cast<std::size_t>(p.n()));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), ctx.rng);

    const auto fh = dft_fast(f, p);
    const auto dr = rank(delta, p);
    const auto a = dft_fast(negate_rule(f, p), p);
    const auto b = dft_fast(conj_rule(f, p), p);
    const auto c = dft_fast(shift_rule(f, delta, p), p);
    const auto e = dft_fast(modulation_rule(f, delta, p), p);
    const auto g = dft_fast(permute_rule(f, sigma, p), p);
    const auto sr = permuted_ranks(sigma, p);
    bool ok = true;
    for (std::size_t r = 0; r < p.D(); ++r) {
      ok = ok && a[r] == fh[table.negated(r)] && b[r] == conj(fh[r]) &&
           c[r] == fh[r].times_root(-table.dot(r, dr)) && e[r] == fh[table.added(r, dr)] && g[r] == fh[sr[r]];
    }
    if (!s.check(ok, [&] {
          json w = {{"delta", delta.digits}, {"sigma", sigma}};
          json vals = json::array();
          for (const auto& x : f) vals.push_back(*x.as_root());
          w["f_exponents"] = vals;
          return w;
        }))
      break;
  }
  return s.result();
}

SuiteResult dft_pairing(Context& ctx) {
  Suite s("dft.pairing", ctx);
  s.mode("sampled");
  const auto& p = ctx.params;
  std::uniform_int_distribution<std::int64_t> coeff(-20, 20);
  auto random_vector = [&] {
    std::vector<CycNum> v;
    for (std::size_t k = 0; k < p.D(); ++k) {
      std::vector<std::int64_t> c(static_cast<std::size_t>(p.d()));
      for (auto& x : c) x = coeff(ctx.rng);
      v.push_back(CycNum::from_coeffs(p.d(), c));
    }
    return v;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const auto beta = random_vector(), gamma = random_vector();
    const auto bh = dft_fast(beta, p), gh = dft_fast(gamma, p);
    CycNum lhs(p.d()), rhs(p.d());
    for (std::size_t k = 0; k < p.D(); ++k) {
      lhs += conj(bh[k]) * gh[k];
      rhs += conj(beta[k]) * gamma[k];
    }
    if (!s.check(lhs == rhs.scaled(static_cast<std::int64_t>(p.D())), [&] { return json{{"trial", trial}}; })) break;
  }
  return s.result();
}

SuiteResult bellpoly_injective(Context& ctx) {
  Suite s("bellpoly.injective_degree", ctx);
  const auto& p = ctx.params;
  for (std::size_t r = 0; r < p.D(); ++r) {
    if (!s.check(monomial_degree(r, p) == p.n() * (p.d() - 1), [&] { return json{{"monomial", monomial_name(r, p)}}; }))
      return s.result();
  }
  std::set<std::vector<CycNum>> seen;
  for (auto code : function_codes(ctx)) {
    const auto f = function_at(ctx, code);
    const auto poly = polynomial_of(f);
    const bool fresh = seen.insert(poly.coeffs).second || !ctx.enumerable;
    if (!s.check(fresh && poly.generating_function() == f, [&] { return function_witness(f); })) break;
  }
  return s.result();
}

SuiteResult bellpoly_closure(Context& ctx) {
  Suite s("bellpoly.symmetry_closure", ctx);
  const auto gens = generators(ctx.params, GeneratorSet::full());
  for (auto code : function_codes(ctx, 500)) {
    const auto f = function_at(ctx, code);
    const auto poly = polynomial_of(f);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const auto image = apply_symmetry(gens[g], poly);
      const bool ok = image.is_valid() && polynomial_of(apply_symmetry(gens[g], f)) == image;
      if (!s.check(ok, [&] {
            auto w = function_witness(f);
            w["generator"] = g;
            return w;
          }))
        return s.result();
    }
  }
  return s.result();
}

SuiteResult bellpoly_bowtie(Context& ctx) {
  Suite s("bellpoly.bowtie", ctx);
  const auto& p = ctx.params;
  if (p.n() == 0) {
    s.skip("needs n >= 1");
    return s.result();
  }
  const auto lower = p.with_parties(p.n() - 1);
  const std::size_t block = lower.D();
  for (auto code : function_codes(ctx)) {
    const auto f = function_at(ctx, code);
    std::vector<BellPolynomial> parts;
    for (int t = 0; t < p.d(); ++t) {
      std::vector<int> e(f.exponents().begin() + t * block, f.exponents().begin() + (t + 1) * block);
      parts.push_back(polynomial_of(DitFunction::from_exponents(lower, std::move(e))));
    }
    if (!s.check(bowtie(parts) == polynomial_of(f), [&] { return function_witness(f); })) break;
  }
  return s.result();
}

SuiteResult bellpoly_orbits(Context& ctx) {
  Suite s("bellpoly.orbit_partition", ctx);
  if (!ctx.enumerable) {
    s.skip("function space exceeds the enumeration limit");
    return s.result();
  }
  const GeneratorSet set{ctx.config.permutations, true, true, true, ctx.config.conjugation};
  const auto table = classify_orbits(ctx.params, set, ctx.config.enumeration_limit, ctx.config.parallelism);
  const auto order = set.group_order(ctx.params);
  std::uint64_t total = 0;
  for (const auto& o : table.orbits) {
    total += o.size;
    if (!s.check(order % o.size == 0, [&] { return json{{"representative", o.representative}, {"size", o.size}}; }))
      return s.result();
  }
  s.check(total == *ctx.params.function_count(), [&] { return json{{"sum_of_sizes", total}}; });
  return s.result();
}

bool facet_applicable(Suite& s) {
  if (s.ctx().params.d() < 3) {
    s.skip("facet inequalities need d >= 3");
    return false;
  }
  return true;
}

SuiteResult polytope_facets(Context& ctx) {
  Suite s("polytope.facets", ctx);
  if (!facet_applicable(s)) return s.result();
  const auto& p = ctx.params;
  std::vector<CorrelationVector> points;
  for (const auto& v : vertices(p)) points.push_back(vertex_vector(v, p));
  for (auto code : function_codes(ctx)) {
    const auto f = function_at(ctx, code);
    const auto facet = facet_vector(f);
    double best = -1e300;
    std::size_t saturated = 0;
    for (const auto& x : points) {
      const double value = evaluate(facet, x);
      best = std::max(best, value);
      saturated += std::abs(value - 1.0) <= kMembershipTolerance;
    }
    const bool ok = best <= 1.0 + kMembershipTolerance && std::abs(best - 1.0) <= kMembershipTolerance &&
                    saturated == 2 * p.D();
    if (!s.check(ok, [&] {
          auto w = function_witness(f);
          w["max_value"] = best;
          w["saturated"] = saturated;
          return w;
        }))
      break;
  }
  return s.result();
}

SuiteResult polytope_lhv(Context& ctx) {
  Suite s("polytope.lhv_closure", ctx);
  if (!facet_applicable(s)) return s.result();
  if (!ctx.enumerable) {
    s.skip("membership needs a full facet scan");
    return s.result();
  }
  s.mode("sampled");
  const auto& p = ctx.params;
  const int mixtures = *p.function_count() <= 1000 ? 1000 : 100;
  std::uniform_int_distribution<int> digit(0, p.d() - 1), size(1, 6);
  std::exponential_distribution<double> expo(1.0);
  for (int trial = 0; trial < mixtures; ++trial) {
    std::vector<LhvStrategy> mix(static_cast<std::size_t>(size(ctx.rng)));
    double total = 0.0;
    for (auto& st : mix) {
      st.a.resize(static_cast<std::size_t>(p.n()));
      st.b.resize(static_cast<std::size_t>(p.n()));
      for (int i = 0; i < p.n(); ++i) {
        st.a[i] = digit(ctx.rng);
        st.b[i] = digit(ctx.rng);
      }
      st.weight = expo(ctx.rng);
      total += st.weight;
    }
    for (auto& st : mix) st.weight /= total;
    const auto xi = lhv_sample(mix, p);
    const auto report = membership(xi, p, ctx.config.enumeration_limit, ctx.config.parallelism);
    if (!s.check(report.verdict != Verdict::outside, [&] {
          return json{{"xi", complex_array(xi)}, {"worst_value", report.worst_value}, {"worst_code", report.worst_code}};
        }))
      break;
  }
  return s.result();
}

SuiteResult polytope_duality(Context& ctx) {
  Suite s("polytope.duality", ctx);
  if (!facet_applicable(s)) return s.result();
  for (auto code : function_codes(ctx)) {
    const auto f = function_at(ctx, code);
    if (!s.check(dft_duality_holds(f), [&] { return function_witness(f); })) break;
  }
  return s.result();
}

SuiteResult polytope_rotation(Context& ctx) {
  Suite s("polytope.rotation_symmetry", ctx);
  if (!facet_applicable(s)) return s.result();
  if (!ctx.enumerable) {
    s.skip("needs every facet value");
    return s.result();
  }
  s.mode("sampled");
  const auto& p = ctx.params;
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 5; ++trial) {
    CorrelationVector xi(p.D());
    for (auto& x : xi) x = {0.3 * g(ctx.rng), 0.3 * g(ctx.rng)};
    CorrelationVector turned = xi;
    for (auto& x : turned) x *= root_of_unity(p.d(), 1);
    auto a = facet_values(xi, p, ctx.config.enumeration_limit, ctx.config.parallelism);
    auto b = facet_values(turned, p, ctx.config.enumeration_limit, ctx.config.parallelism);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double gap = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) gap = std::max(gap, std::abs(a[k] - b[k]));
    if (!s.check(gap < 1e-9, [&] { return json{{"xi", complex_array(xi)}, {"gap", gap}}; })) break;
  }
  return s.result();
}

SuiteResult quantum_pauli(Context& ctx) {
  Suite s("quantum.pauli", ctx);
  s.mode("exhaustive");
  const int d = ctx.params.d();
  const auto x = pauli_x(d), z = pauli_z(d), id = ComplexMatrix::identity(static_cast<std::size_t>(d));
  const auto w = root_of_unity(d, 1);
  s.check(max_abs_diff(z * x, w * (x * z)) < 1e-12, [] { return json{{"identity", "ZX = wXZ"}}; });
  s.check(max_abs_diff(x.pow(d), id) < 1e-12 && max_abs_diff(z.pow(d), id) < 1e-12,
          [] { return json{{"identity", "X^d = Z^d = I"}}; });
  for (int k = 0; k < d; ++k) {
    const auto u = x * z.pow(k);
    for (const auto& lambda : xz_eigenvalues(d, k)) {
      s.check(eigenvalue_certificate(u, lambda, 1e-9).holds, [&] {
        return json{{"identity", "spectrum of XZ^k"}, {"k", k}, {"lambda", complex_json(lambda)}};
      });
    }
    for (int e = 0; e < d; ++e) {
      s.check(pauli_power_identity(d, k, e), [&] { return json{{"identity", "power"}, {"k", k}, {"e", e}}; });
    }
  }
  return s.result();
}

SuiteResult quantum_plans(Context& ctx) {
  Suite s("quantum.measurement_plans", ctx);
  const int d = ctx.params.d();
  if (!is_prime(d)) {
    s.skip("measurement plans need prime d");
    return s.result();
  }
  s.mode("exhaustive");
  for (int r = 0; r < d; ++r) {
    const auto plan = measurement_plan(d, r);
    const auto o = plan_operator(d, plan);
    CycMatrix acc = CycMatrix::identity(d, static_cast<std::size_t>(d));
    for (int e = 0; e < plan.power; ++e) acc = acc * o;
    s.check(acc.scaled(plan.phase) == monomial_operator_exact(d, r), [&] { return json{{"r", r}}; });
  }
  return s.result();
}

SuiteResult quantum_consistency(Context& ctx) {
  Suite s("quantum.consistency", ctx);
  if (!facet_applicable(s)) return s.result();
  const auto& p = ctx.params;
  if (p.D() > std::min<std::size_t>(ctx.config.matrix_dim_limit, 243)) {
    s.skip("D exceeds the matrix limit for this suite");
    return s.result();
  }
  s.mode("sampled");
  std::normal_distribution<double> g;
  const auto codes = function_codes(ctx);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = function_at(ctx, codes[ctx.rng() % codes.size()]);
    std::vector<cplx> amps(p.D());
    for (auto& a : amps) a = {g(ctx.rng), g(ctx.rng)};
    const auto state = StateVector::normalized(amps);
    const auto facet = facet_vector(f);
    const auto q = build_q(f, ctx.config.matrix_dim_limit);
    const double via_facet = evaluate(facet, quantum_correlations(state, p));
    const double via_operator = expectation(state, q, facet.prefactor);
    const double bound = violation_bound(f, Convention::raw, ctx.config.matrix_dim_limit).value;
    if (!s.check(std::abs(via_facet - via_operator) < 1e-10 && via_operator <= bound + 1e-9, [&] {
          auto w = function_witness(f);
          w["facet_value"] = via_facet;
          w["expectation"] = via_operator;
          w["bound"] = bound;
          return w;
        }))
      break;
  }
  return s.result();
}

SuiteResult quantum_eigensolver(Context& ctx) {
  Suite s("quantum.eigensolver", ctx);
  const std::size_t dim = std::min<std::size_t>(ctx.params.D(), std::min<std::size_t>(ctx.config.matrix_dim_limit, 81));
  s.mode("sampled");
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 5; ++trial) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = {g(ctx.rng), g(ctx.rng)};
    m = m.hermitian_part();
    const auto eig = hermitian_eigs(m);
    ComplexMatrix lambda(dim);
    for (std::size_t j = 0; j < dim; ++j) lambda(j, j) = eig.values[j];
    const double err = (eig.vectors * lambda * eig.vectors.adjoint() - m).norm_frobenius();
    if (!s.check(err <= 1e-8 * std::max(1.0, m.norm_frobenius()), [&] { return json{{"dim", dim}, {"error", err}}; }))
      break;
  }
  return s.result();
}

}  // namespace

std::string to_string(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::pass:
      return "pass";
    case SuiteStatus::fail:
      return "fail";
    case SuiteStatus::skipped:
      return "skipped";
  }
  return "?";
}

std::vector<SuiteResult> run_verification(const RunConfig& config) {
  const Params p = Params::make(config.d, config.n);
  const auto count = p.function_count();
  Context ctx{config, p, count && *count <= config.enumeration_limit, std::mt19937_64(config.seed)};
  using Runner = SuiteResult (*)(Context&);
  const Runner runners[] = {dft_direct_vs_fast, dft_unitarity,   dft_round_trip,   dft_spectrum_rules,
                            dft_pairing,        bellpoly_injective, bellpoly_closure, bellpoly_bowtie,
                            bellpoly_orbits,    polytope_facets,  polytope_lhv,     polytope_duality,
                            polytope_rotation,  quantum_pauli,    quantum_plans,    quantum_consistency,
                            quantum_eigensolver};
  std::vector<SuiteResult> results;
  for (auto runner : runners) results.push_back(runner(ctx));
  return results;
}

}  // namespace hbell::cli
