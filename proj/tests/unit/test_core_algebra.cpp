#include <doctest.h>

#include <random>

#include "hbell/cyclotomic.hpp"
#include "hbell/multi_index.hpp"
#include "hbell/params.hpp"
#include "oracles.hpp"

using namespace hbell;

namespace {

CycNum w3(long long k) { return CycNum::root(3, k); }

CycNum random_cyc(int d, std::mt19937_64& rng, int bound = 1000) {
  std::uniform_int_distribution<std::int64_t> u(-bound, bound);
  std::vector<std::int64_t> c(d);
  for (auto& x : c) x = u(rng);
  return CycNum::from_coeffs(d, c);
}

}  // namespace

TEST_CASE("params") {
  const auto p = Params::make(3, 2);
  CHECK(p.D() == 9);
  CHECK(*p.function_count() == 19683);
  CHECK(*Params::make(2, 0).function_count() == 2);
  CHECK_THROWS_AS(Params::make(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Params::make(3, -1), std::invalid_argument);
  CHECK_THROWS_AS(Params::make(3, 40), LimitError);
  CHECK_THROWS_AS(Params::make(3, 3).require_enumerable(kDefaultEnumerationLimit), LimitError);
  CHECK_FALSE(Params::make(3, 4).function_count().has_value());
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(3) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(totient(12) == 4);
  CHECK(totient(7) == 6);
}

TEST_CASE("ring examples") {
  CHECK((CycNum::integer(3, 1) + w3(1) + w3(2)).is_zero());
  CHECK(w3(1) * w3(2) == CycNum::integer(3, 1));
  CHECK(w3(1) + w3(2).scaled(2) == w3(2) - CycNum::integer(3, 1));
  CHECK(CycNum::integer(3, 5).coeffs()[2] == 0);
  CHECK_THROWS(w3(1) + CycNum::root(5, 1));
}

TEST_CASE("canonical form is unique") {
  for (int d : {2, 3, 5, 7}) {
    CycNum sum(d);
    for (int k = 0; k < d; ++k) sum += CycNum::root(d, k);
    CHECK(sum.is_zero());
    CHECK(CycNum::root(d, 1).coeffs()[d - 1] == 0);
  }
  CHECK(CycNum::root(3, 2) == -CycNum::integer(3, 1) - w3(1));
  CHECK(CycNum::root(4, 2) == CycNum::integer(4, -1));
  CHECK(CycNum::root(6, 3) == CycNum::integer(6, -1));
}

TEST_CASE("conjugation") {
  CHECK(conj(w3(1)) == w3(2));
  CHECK(conj(w3(2) - CycNum::integer(3, 1)) == w3(1) - CycNum::integer(3, 1));
  for (int k = -3; k <= 3; ++k) CHECK(conj(CycNum::integer(2, k)) == CycNum::integer(2, k));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_cyc(5, rng);
    CHECK(conj(conj(a)) == a);
  }
}

TEST_CASE("realness") {
  CHECK_FALSE(is_real(w3(1) - w3(2)));
  CHECK(is_real(CycNum::integer(3, 3)));
  CHECK(is_real(w3(1) + w3(2)));
  CHECK(is_real(CycNum::root(5, 1) + CycNum::root(5, 4)));
}

TEST_CASE("to_complex") {
  const auto z = to_complex(w3(1));
  CHECK(z.real() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(z.imag() == doctest::Approx(0.8660254038).epsilon(1e-10));
  const auto i4 = to_complex(CycNum::root(4, 1));
  CHECK(std::abs(i4 - std::complex<double>(0, 1)) < 1e-15);
  const auto v = to_complex(w3(2) - CycNum::integer(3, 1));
  CHECK(std::abs(v - std::complex<double>(-1.5, -0.8660254037844386)) < 1e-12);

  std::mt19937_64 rng(11);
  for (int d : {3, 4, 5, 6, 9}) {
    for (int i = 0; i < 30; ++i) {
      const auto a = random_cyc(d, rng);
      const auto b = random_cyc(d, rng);
      double scale = 0.0;
      for (auto x : a.coeffs())
        for (auto y : b.coeffs()) scale += std::abs(static_cast<double>(x) * static_cast<double>(y));
      CHECK(std::abs(to_complex(a * b) - to_complex(a) * to_complex(b)) <= 1e-12 * (1.0 + scale));
      std::vector<std::int64_t> raw(d);
      std::uniform_int_distribution<std::int64_t> u(-1000, 1000);
      std::complex<double> direct;
      for (int k = 0; k < d; ++k) {
        raw[k] = u(rng);
        direct += static_cast<double>(raw[k]) * oracle::w(d, k);
      }
      CHECK(std::abs(CycNum::from_coeffs(d, raw).to_complex() - direct) < 1e-9);
    }
  }
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(3);
  for (int d : {3, 5, 8, 12}) {
    for (int i = 0; i < 40; ++i) {
      const auto a = random_cyc(d, rng), b = random_cyc(d, rng), c = random_cyc(d, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      CHECK(a - a == CycNum(d));
      CHECK(conj(a * b) == conj(a) * conj(b));
    }
  }
}

TEST_CASE("overflow is detected") {
  const auto big = CycNum::integer(3, std::int64_t{1} << 62);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  CHECK_THROWS_AS(big + big, std::overflow_error);
}

TEST_CASE("as_root and exact division") {
  CHECK(w3(2).as_root() == 2);
  CHECK_FALSE((w3(1) + w3(1)).as_root().has_value());
  CHECK((w3(1).scaled(3)).divided_by(3) == w3(1));
  CHECK_FALSE(w3(1).divided_by(3).has_value());
  CHECK((w3(2) - CycNum::integer(3, 1)).to_string() == "w^2 - 1");
}

TEST_CASE("multi-index") {
  const auto p32 = Params::make(3, 2);
  CHECK(dot_mod({{1, 1}}, {{1, 1}}, p32) == 2);
  CHECK(dot_mod({{1, 0}}, {{0, 1}}, p32) == 0);
  CHECK(dot_mod({{1, 1, 0}}, {{1, 1, 1}}, Params::make(2, 3)) == 0);
  CHECK(decode(1, p32).digits == std::vector<int>{1, 0});
  CHECK(decode(3, p32).digits == std::vector<int>{0, 1});
  for (auto [d, n] : {std::pair{2, 5}, {3, 3}, {5, 2}}) {
    const auto p = Params::make(d, n);
    const IndexTable table(p);
    for (std::size_t k = 0; k < p.D(); ++k) {
      const auto s = decode(k, p);
      CHECK(rank(s, p) == k);
      CHECK(table.negated(k) == rank(negate(s, p), p));
      for (std::size_t t = 0; t < p.D(); t += 3) {
        CHECK(table.dot(k, t) == dot_mod(s, decode(t, p), p));
        CHECK(table.added(k, t) == rank(add(s, decode(t, p), p), p));
      }
    }
  }
}
