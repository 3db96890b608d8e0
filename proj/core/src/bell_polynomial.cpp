#include "hbell/bell_polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hbell/dft.hpp"
#include "hbell/multi_index.hpp"

namespace hbell {

DitFunction DitFunction::from_exponents(const Params& p, std::vector<int> exponents) {
  if (exponents.size() != p.D()) {
    throw std::invalid_argument("dit function needs " + std::to_string(p.D()) + " exponents, got " +
                                std::to_string(exponents.size()));
  }
  for (int e : exponents) {
    if (e < 0 || e >= p.d()) throw std::invalid_argument("dit function exponent out of [0, d)");
  }
  return DitFunction(p, std::move(exponents));
}

DitFunction DitFunction::from_code(const Params& p, std::uint64_t code) {
  std::vector<int> e(p.D());
  for (std::size_t k = p.D(); k-- > 0;) {
    e[k] = static_cast<int>(code % static_cast<std::uint64_t>(p.d()));
    code /= static_cast<std::uint64_t>(p.d());
  }
  if (code != 0) throw std::out_of_range("function code out of range");
  return DitFunction(p, std::move(e));
}

DitFunction DitFunction::constant(const Params& p, int exponent) {
  return from_exponents(p, std::vector<int>(p.D(), ((exponent % p.d()) + p.d()) % p.d()));
}

std::vector<CycNum> DitFunction::values() const {
  std::vector<CycNum> v;
  v.reserve(exponents_.size());
  for (int e : exponents_) v.push_back(CycNum::root(params_.d(), e));
  return v;
}

std::uint64_t DitFunction::code() const {
  std::uint64_t c = 0;
  for (int e : exponents_) c = c * static_cast<std::uint64_t>(params_.d()) + static_cast<std::uint64_t>(e);
  return c;
}

FunctionSpace enumerate_functions(const Params& p, std::uint64_t limit) {
  p.require_enumerable(limit);
  return FunctionSpace(p, *p.function_count());
}

bool BellPolynomial::is_real() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const CycNum& c) { return c.is_real(); });
}

std::optional<DitFunction> BellPolynomial::generating_function() const {
  if (coeffs.size() != params.D()) return std::nullopt;
  std::vector<CycNum> values;
  try {
    values = idft(coeffs, params);
  } catch (const NotASpectrumError&) {
    return std::nullopt;
  }
  std::vector<int> e;
  e.reserve(values.size());
  for (const auto& v : values) {
    auto k = v.as_root();
    if (!k) return std::nullopt;
    e.push_back(*k);
  }
  return DitFunction::from_exponents(params, std::move(e));
}

std::string BellPolynomial::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < coeffs.size(); ++r) {
    const CycNum& c = coeffs[r];
    if (c.is_zero()) continue;
    const std::string monomial = params.n() > 0 ? monomial_name(r, params) : "";
    std::string text = c.to_string();
    bool negative = false;
    const bool single_term = text.find(' ') == std::string::npos;
    if (single_term) {
      negative = text.front() == '-';
      if (negative) text.erase(0, 1);
      if (text == "1" && !monomial.empty()) text.clear();
    } else if (!monomial.empty()) {
      text = "(" + text + ")";
    }
    if (out.empty()) {
      out = negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += text + monomial;
  }
  return out.empty() ? "0" : out;
}

BellPolynomial polynomial_of(const DitFunction& f) {
  // fhat(r) = sum_s w^{r.s + e(s)}: count how often each power of w occurs.
  const Params& p = f.params();
  const IndexTable idx(p);
  BellPolynomial poly{p, {}};
  poly.coeffs.reserve(p.D());
  std::vector<std::int64_t> bins(static_cast<std::size_t>(p.d()));
  for (std::size_t r = 0; r < p.D(); ++r) {
    std::fill(bins.begin(), bins.end(), 0);
    for (std::size_t s = 0; s < p.D(); ++s) ++bins[(idx.dot(r, s) + f.exponent(s)) % p.d()];
    poly.coeffs.push_back(CycNum::from_coeffs(p.d(), bins));
  }
  return poly;
}

BellPolynomial bowtie(std::span<const BellPolynomial> parts) {
  if (parts.empty()) throw std::invalid_argument("bowtie needs d operands");
  const Params lower = parts.front().params;
  const int d = lower.d();
  if (parts.size() != static_cast<std::size_t>(d)) {
    throw std::invalid_argument("bowtie needs exactly d = " + std::to_string(d) + " operands");
  }
  for (const auto& part : parts) {
    if (part.params != lower || part.coeffs.size() != lower.D()) {
      throw std::invalid_argument("bowtie operands must share (d, n)");
    }
  }
  const Params upper = lower.with_parties(lower.n() + 1);
  BellPolynomial out{upper, std::vector<CycNum>(upper.D(), CycNum(d))};
  // The new party is the slowest coordinate of the rank.
  for (int rn = 0; rn < d; ++rn) {
    for (std::size_t low = 0; low < lower.D(); ++low) {
      CycNum acc(d);
      for (int t = 0; t < d; ++t) acc += parts[t].coeffs[low].times_root(static_cast<long long>(rn) * t);
      out.coeffs[static_cast<std::size_t>(rn) * lower.D() + low] = std::move(acc);
    }
  }
  return out;
}

std::string monomial_name(std::size_t rank, const Params& p) {
  const MultiIndex r = decode(rank, p);
  std::string name;
  auto power = [&](char var, int party, int e) {
    if (e == 0) return;
    name += var;
    name += std::to_string(party + 1);
    if (e > 1) name += "^" + std::to_string(e);
  };
  for (int i = 0; i < p.n(); ++i) {
    power('A', i, p.d() - 1 - r.digits[i]);
    power('B', i, r.digits[i]);
  }
  return name;
}

int monomial_degree(std::size_t rank, const Params& p) {
  const MultiIndex r = decode(rank, p);
  int deg = 0;
  for (int x : r.digits) deg += (p.d() - 1 - x) + x;
  return deg;
}

std::vector<BellPolynomial> compact_form_polynomials() {
  const Params p = Params::make(3, 1);
  std::vector<BellPolynomial> out;
  for (int u = 0; u < 3; ++u) {
    for (int v = 0; v < 3; ++v) {
      for (std::size_t m = 0; m < 3; ++m) {
        BellPolynomial poly{p, {}};
        const CycNum vm1 = CycNum::root(3, v) - CycNum::integer(3, 1);
        for (std::size_t r = 0; r < 3; ++r) {
          CycNum c = vm1;
          if (r == m) c += CycNum::integer(3, 3);
          poly.coeffs.push_back(c.times_root(u));
        }
        out.push_back(std::move(poly));
      }
    }
  }
  return out;
}

bool compact_form_check() {
  const Params p = Params::make(3, 1);
  using Key = std::vector<CycNum>;
  std::set<Key> enumerated;
  for (const auto& f : enumerate_functions(p)) enumerated.insert(polynomial_of(f).coeffs);
  std::set<Key> formula;
  for (const auto& poly : compact_form_polynomials()) formula.insert(poly.coeffs);
  return enumerated.size() == 27 && enumerated == formula;
}

}  // namespace hbell
