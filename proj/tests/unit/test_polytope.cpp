#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hbell/polytope.hpp"
#include "hbell/violation.hpp"
#include "oracles.hpp"

using namespace hbell;
using cd = std::complex<double>;

namespace {

const double kSqrt3 = std::sqrt(3.0);

std::vector<LhvStrategy> random_mixture(const Params& p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> digit(0, p.d() - 1), size(1, 6);
  std::exponential_distribution<double> expo(1.0);
  std::vector<LhvStrategy> mix(size(rng));
  double total = 0.0;
  for (auto& s : mix) {
    s.a.resize(p.n());
    s.b.resize(p.n());
    for (int i = 0; i < p.n(); ++i) {
      s.a[i] = digit(rng);
      s.b[i] = digit(rng);
    }
    s.weight = expo(rng);
    total += s.weight;
  }
  for (auto& s : mix) s.weight /= total;
  return mix;
}

}  // namespace

TEST_CASE("dual of the hull of U") {
  const auto v3 = hull_u_dual_vertices(3);
  REQUIRE(v3.size() == 3);
  CHECK(std::abs(v3[0] - cd(1, kSqrt3)) < 1e-12);
  CHECK(std::abs(v3[1] - cd(-2, 0)) < 1e-12);
  CHECK(std::abs(v3[2] - cd(1, -kSqrt3)) < 1e-12);
  const auto v4 = hull_u_dual_vertices(4);
  const std::vector<cd> expected4{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(v4[k] - expected4[k]) < 1e-12);
  for (int d : {3, 4, 5, 7}) {
    for (const auto& g : hull_u_dual_vertices(d)) {
      double best = -10;
      for (int k = 0; k < d; ++k) {
        const double v = (std::conj(oracle::w(d, k)) * g).real();
        CHECK(v <= 1 + 1e-12);
        best = std::max(best, v);
      }
      CHECK(best == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  CHECK_THROWS(hull_u_dual_vertices(2));
}

TEST_CASE("prefactors") {
  const cd w2 = oracle::w(3, 2);
  for (int n : {1, 2, 3}) {
    const auto p = Params::make(3, n);
    const double scale = std::pow(3.0, n);
    CHECK(std::abs(facet_prefactor(p, Convention::raw) - (-2.0 * w2 / scale)) < 1e-14);
    CHECK(std::abs(facet_prefactor(p, Convention::regauged) - cd(-2.0 / scale, 0)) < 1e-14);
  }
  CHECK_THROWS(facet_prefactor(Params::make(2, 2), Convention::raw));
  CHECK_THROWS(facet_prefactor(Params::make(5, 1), Convention::regauged));
  CHECK(parse_convention("regauged") == Convention::regauged);
  CHECK(to_string(Convention::raw) == "raw");
  CHECK_THROWS(parse_convention("canonical"));
}

TEST_CASE("facet vectors") {
  const auto p31 = Params::make(3, 1);
  const auto one = facet_vector(DitFunction::constant(p31, 0));
  CHECK(std::abs(one.beta[0] - std::conj(-2.0 * oracle::w(3, 2))) < 1e-12);
  CHECK(std::abs(one.beta[1]) < 1e-15);
  CHECK(std::abs(one.beta[2]) < 1e-15);
  CHECK_THROWS(facet_vector(DitFunction::constant(Params::make(2, 1), 0)));

  std::mt19937_64 rng(41);
  for (auto [d, n] : {std::pair{3, 2}, {5, 1}, {4, 2}}) {
    const auto p = Params::make(d, n);
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = DitFunction::from_code(p, rng() % *p.function_count());
      const auto facet = facet_vector(f);
      const auto fhat = oracle::spectrum(f);
      double energy = 0.0;
      for (std::size_t r = 0; r < p.D(); ++r) {
        CHECK(std::abs(facet.beta[r] - std::conj(facet.prefactor * fhat[r])) < 1e-12);
        energy += std::norm(fhat[r]);
      }
      CHECK(energy == doctest::Approx(double(p.D() * p.D())));
    }
  }
}

TEST_CASE("vertices") {
  const auto p31 = Params::make(3, 1);
  const auto vs = vertices(p31);
  CHECK(vs.size() == 9);
  const auto xi0 = vertex_vector({0, 0}, p31);
  for (const auto& x : xi0) CHECK(std::abs(x - 1.0) < 1e-15);
  const auto v = vertex_vector({2, 1}, p31);
  const std::vector<cd> expected{oracle::w(3, 2), 1.0, oracle::w(3, 1)};
  for (int k = 0; k < 3; ++k) CHECK(std::abs(v[k] - expected[k]) < 1e-12);
  for (auto [d, n] : {std::pair{3, 2}, {4, 2}, {5, 1}}) {
    const auto p = Params::make(d, n);
    const auto all = vertices(p);
    CHECK(all.size() == d * p.D());
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto vi = vertex_vector(all[i], p);
      for (const auto& x : vi) CHECK(std::abs(std::abs(x) - 1.0) < 1e-12);
      for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(oracle::max_diff(vi, vertex_vector(all[j], p)) > 0.5);
    }
  }
  CHECK_THROWS_AS(vertices(Params::make(3, 3), 10), LimitError);
}

TEST_CASE("facet values at vertices") {
  for (auto [d, n] : {std::pair{3, 1}, {3, 2}, {4, 1}, {5, 1}}) {
    const auto p = Params::make(d, n);
    const auto vs = vertices(p);
    std::vector<CorrelationVector> points;
    for (const auto& v : vs) points.push_back(vertex_vector(v, p));
    std::vector<double> allowed;
    for (int m = 0; m < d; ++m) allowed.push_back(std::cos((2 * m + 1) * std::numbers::pi / d) / std::cos(std::numbers::pi / d));
    for (const auto& f : enumerate_functions(p)) {
      const auto facet = facet_vector(f);
      double best = -1e9;
      int saturated = 0;
      for (const auto& x : points) {
        const double value = evaluate(facet, x);
        CHECK(value <= 1 + 1e-12);
        const bool listed = std::any_of(allowed.begin(), allowed.end(), [&](double a) { return std::abs(a - value) < 1e-9; });
        CHECK(listed);
        best = std::max(best, value);
        saturated += std::abs(value - 1.0) < 1e-9;
      }
      CHECK(std::abs(best - 1.0) < 1e-9);
      CHECK(saturated == 2 * p.D());
    }
  }
  const auto p = Params::make(3, 2);
  const CorrelationVector zero(9);
  CHECK(evaluate(facet_vector(DitFunction::from_code(p, 1234)), zero) == 0.0);
  CHECK_THROWS(evaluate(facet_vector(DitFunction::from_code(p, 1234)), CorrelationVector(3)));
}

TEST_CASE("membership") {
  for (auto [d, n] : {std::pair{3, 1}, {3, 2}}) {
    const auto p = Params::make(d, n);
    for (const auto& v : vertices(p)) {
      const auto report = membership(vertex_vector(v, p), p);
      CHECK(report.verdict == Verdict::boundary);
      CHECK(std::abs(report.worst_value - 1.0) < 1e-9);
    }
    const auto zero = membership(CorrelationVector(p.D()), p);
    CHECK(zero.verdict == Verdict::inside);
    CHECK(zero.worst_code == 0);
  }
  const auto p = Params::make(3, 1);
  CHECK_THROWS(membership(CorrelationVector{2.0, 0.0, 0.0}, p));
  CHECK_THROWS(membership(CorrelationVector(2), p));
  CHECK_THROWS_AS(membership(CorrelationVector(9), Params::make(3, 2), 100), LimitError);

  std::mt19937_64 rng(43);
  std::normal_distribution<double> g;
  const auto p32 = Params::make(3, 2);
  for (int trial = 0; trial < 5; ++trial) {
    CorrelationVector xi(9);
    for (auto& x : xi) x = cd(g(rng), g(rng)) * 0.3;
    const auto seq = membership(xi, p32);
    const auto par = membership(xi, p32, kDefaultEnumerationLimit, 4);
    CHECK(seq.worst_code == par.worst_code);
    CHECK(seq.worst_value == par.worst_value);
    CHECK(facet_values(xi, p32, kDefaultEnumerationLimit, 3) == facet_values(xi, p32));

    // Multiplying by w permutes the facet values.
    CorrelationVector rotated = xi;
    for (auto& x : rotated) x *= oracle::w(3, 1);
    auto a = facet_values(xi, p32), b = facet_values(rotated, p32);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a[k] - b[k]) < 1e-12);
  }
}

TEST_CASE("local strategies") {
  const auto p = Params::make(3, 1);
  const LhvStrategy trivial{{0}, {0}, 1.0};
  for (const auto& x : deterministic_correlations(trivial, p)) CHECK(std::abs(x - 1.0) < 1e-15);
  const LhvStrategy s{{1}, {2}, 1.0};
  const auto xi = lhv_sample(std::vector{s}, p);
  const std::vector<cd> expected{oracle::w(3, 2), 1.0, oracle::w(3, 1)};
  for (int k = 0; k < 3; ++k) CHECK(std::abs(xi[k] - expected[k]) < 1e-12);

  std::mt19937_64 rng(47);
  for (auto [d, n] : {std::pair{3, 2}, {4, 2}, {5, 2}}) {
    const auto pp = Params::make(d, n);
    std::uniform_int_distribution<int> digit(0, d - 1);
    for (int trial = 0; trial < 30; ++trial) {
      LhvStrategy st{std::vector<int>(n), std::vector<int>(n), 1.0};
      for (int i = 0; i < n; ++i) {
        st.a[i] = digit(rng);
        st.b[i] = digit(rng);
      }
      // u = prod a_i^{d-1}, w^{r_i} = b_i / a_i
      int u = 0;
      std::vector<int> r(n);
      for (int i = 0; i < n; ++i) {
        u += (d - 1) * st.a[i];
        r[i] = ((st.b[i] - st.a[i]) % d + d) % d;
      }
      const auto direct = deterministic_correlations(st, pp);
      const auto vertex = vertex_vector({u % d, oracle::rank_of(r, d)}, pp);
      CHECK(oracle::max_diff(direct, vertex) < 1e-12);
    }
  }

  for (int trial = 0; trial < 1000; ++trial) {
    const auto mix = random_mixture(p, rng);
    CHECK(membership(lhv_sample(mix, p), p).verdict != Verdict::outside);
  }
  const auto p32 = Params::make(3, 2);
  for (int trial = 0; trial < 20; ++trial) {
    CHECK(membership(lhv_sample(random_mixture(p32, rng), p32), p32).verdict != Verdict::outside);
  }
  CHECK_THROWS(lhv_sample(std::vector{LhvStrategy{{0}, {0}, 0.5}}, p));
  CHECK_THROWS(lhv_sample(std::vector{LhvStrategy{{0}, {0}, 1.5}, LhvStrategy{{0}, {1}, -0.5}}, p));
}

TEST_CASE("duality with the transformed simplex") {
  CHECK(dft_duality_check(Params::make(3, 1)));
  CHECK(dft_duality_check(Params::make(5, 1)));
  std::mt19937_64 rng(53);
  const auto p = Params::make(3, 2);
  for (int trial = 0; trial < 200; ++trial) CHECK(dft_duality_holds(DitFunction::from_code(p, rng() % 19683)));

  // independent form of the same identity
  const auto f = DitFunction::from_code(p, 777);
  const auto h = oracle::dft_matrix(3, 2);
  auto scaled = oracle::function_values(f);
  for (auto& x : scaled) x *= rho(3) / std::cos(std::numbers::pi / 3);
  auto image = oracle::matvec(h, scaled);
  const auto facet = facet_vector(f);
  for (std::size_t r = 0; r < 9; ++r) CHECK(std::abs(std::conj(image[r] / 9.0) - facet.beta[r]) < 1e-12);

  const auto one = facet_vector(DitFunction::constant(p, 0));
  CHECK(std::count_if(one.beta.begin(), one.beta.end(), [](cd x) { return std::abs(x) > 1e-12; }) == 1);
}

TEST_CASE("dichotomic bound") {
  const auto p = Params::make(2, 2);
  for (const auto& f : enumerate_functions(p)) {
    double best = 0;
    for (const auto& v : vertices(p)) {
      const double value = werner_wolf_value(f, vertex_vector(v, p));
      CHECK(value <= 1 + 1e-12);
      best = std::max(best, value);
    }
    CHECK(best == doctest::Approx(1.0));
  }
  CHECK_THROWS(werner_wolf_value(DitFunction::constant(Params::make(3, 1), 0), CorrelationVector(3)));
}
