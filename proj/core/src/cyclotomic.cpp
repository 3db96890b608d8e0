#include "hbell/cyclotomic.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hbell/params.hpp"

namespace hbell {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("CycNum coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("CycNum coefficient overflow");
  return r;
}

using Poly = std::vector<std::int64_t>;

// Quotient of a by a monic b; the remainder is known to vanish.
Poly divide_monic(const Poly& a, const Poly& b) {
  Poly rem = a;
  const std::size_t db = b.size() - 1;
  Poly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const std::int64_t c = rem[k];
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= c * b[j];
  }
  return q;
}

const std::array<Poly, kMaxOrder + 1>& cyclotomic_table() {
  static const auto table = [] {
    std::array<Poly, kMaxOrder + 1> t;
    for (int m = 1; m <= kMaxOrder; ++m) {
      Poly p(m + 1, 0);
      p[0] = -1;
      p[m] = 1;
      for (int e = 1; e < m; ++e) {
        if (m % e == 0) p = divide_monic(p, t[e]);
      }
      t[m] = p;
    }
    return t;
  }();
  return table;
}

long long mod(long long k, int d) {
  long long r = k % d;
  return r < 0 ? r + d : r;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int d) {
  if (d < 1 || d > kMaxOrder) throw std::invalid_argument("unsupported cyclotomic order");
  return cyclotomic_table()[d];
}

int totient(int d) { return static_cast<int>(cyclotomic_polynomial(d).size()) - 1; }

std::complex<double> root_of_unity(int d, long long k) {
  const long long m = mod(k, d);
  // Exact values on the axes keep H_d and Pauli matrices free of 1e-17 noise.
  if (m == 0) return {1.0, 0.0};
  if (2 * m == d) return {-1.0, 0.0};
  if (4 * m == d) return {0.0, 1.0};
  if (4 * m == 3 * d) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) / d);
}

CycNum::CycNum(int d) : d_(d), c_(static_cast<std::size_t>(d), 0) {
  if (d < 2 || d > kMaxOrder) throw std::invalid_argument("CycNum order must lie in [2, 64]");
}

CycNum CycNum::from_coeffs(int d, std::span<const std::int64_t> coeffs) {
  CycNum out(d);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    auto& slot = out.c_[k % static_cast<std::size_t>(d)];
    slot = checked_add(slot, coeffs[k]);
  }
  out.canonicalize();
  return out;
}

CycNum CycNum::integer(int d, std::int64_t value) {
  CycNum out(d);
  out.c_[0] = value;
  return out;
}

CycNum CycNum::root(int d, long long k) {
  CycNum out(d);
  out.c_[static_cast<std::size_t>(mod(k, d))] = 1;
  out.canonicalize();
  return out;
}

void CycNum::require_same_order(const CycNum& other) const {
  if (other.d_ != d_) {
    throw std::invalid_argument("CycNum order mismatch: " + std::to_string(d_) + " vs " +
                                std::to_string(other.d_));
  }
}

void CycNum::canonicalize() {
  const auto& phi = cyclotomic_polynomial(d_);
  const int deg = static_cast<int>(phi.size()) - 1;
  for (int k = d_ - 1; k >= deg; --k) {
    const std::int64_t c = c_[k];
    if (c == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (phi[j] != 0) c_[k - deg + j] = checked_add(c_[k - deg + j], -checked_mul(c, phi[j]));
    }
    c_[k] = 0;
  }
}

CycNum& CycNum::operator+=(const CycNum& other) {
  require_same_order(other);
  for (int k = 0; k < d_; ++k) c_[k] = checked_add(c_[k], other.c_[k]);
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) {
  require_same_order(other);
  for (int k = 0; k < d_; ++k) c_[k] = checked_add(c_[k], -other.c_[k]);
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& other) {
  require_same_order(other);
  std::vector<std::int64_t> prod(static_cast<std::size_t>(d_), 0);
  for (int i = 0; i < d_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d_; ++j) {
      if (other.c_[j] == 0) continue;
      auto& slot = prod[(i + j) % d_];
      slot = checked_add(slot, checked_mul(c_[i], other.c_[j]));
    }
  }
  c_ = std::move(prod);
  canonicalize();
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum out(d_);
  for (int k = 0; k < d_; ++k) out.c_[k] = -c_[k];
  return out;
}

CycNum CycNum::times_root(long long k) const {
  CycNum out(d_);
  const long long shift = mod(k, d_);
  for (int i = 0; i < d_; ++i) out.c_[(i + shift) % d_] = c_[i];
  out.canonicalize();
  return out;
}

CycNum CycNum::scaled(std::int64_t factor) const {
  CycNum out(d_);
  for (int k = 0; k < d_; ++k) out.c_[k] = checked_mul(c_[k], factor);
  return out;
}

CycNum CycNum::conj() const {
  CycNum out(d_);
  out.c_[0] = c_[0];
  for (int k = 1; k < d_; ++k) out.c_[d_ - k] = c_[k];
  out.canonicalize();
  return out;
}

bool CycNum::is_zero() const {
  for (auto c : c_) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<int> CycNum::as_root() const {
  for (int k = 0; k < d_; ++k) {
    if (*this == root(d_, k)) return k;
  }
  return std::nullopt;
}

std::optional<CycNum> CycNum::divided_by(std::int64_t divisor) const {
  if (divisor == 0) throw std::invalid_argument("division by zero");
  // The reduced powers 1, w, ..., w^{phi-1} form a Z-basis of Z[w].
  CycNum out(d_);
  for (int k = 0; k < d_; ++k) {
    if (c_[k] % divisor != 0) return std::nullopt;
    out.c_[k] = c_[k] / divisor;
  }
  return out;
}

std::complex<double> CycNum::to_complex() const {
  std::complex<double> sum{0.0, 0.0};
  for (int k = 0; k < d_; ++k) {
    if (c_[k] != 0) sum += static_cast<double>(c_[k]) * root_of_unity(d_, k);
  }
  return sum;
}

std::string CycNum::to_string() const {
  // For prime d any multiple of 1 + w + ... + w^{d-1} may be added; pick the
  // representative with the fewest terms, then the smallest coefficients.
  std::vector<std::int64_t> best = c_;
  if (is_prime(d_)) {
    auto cost = [](const std::vector<std::int64_t>& v) {
      std::pair<int, std::int64_t> c{0, 0};
      for (auto x : v) {
        c.first += x != 0;
        c.second += x < 0 ? -x : x;
      }
      return c;
    };
    for (std::int64_t x : c_) {
      std::vector<std::int64_t> candidate = c_;
      for (auto& y : candidate) y -= x;
      if (cost(candidate) < cost(best)) best = std::move(candidate);
    }
  }
  std::ostringstream os;
  bool first = true;
  auto term = [&](int k, std::int64_t c) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag;
      os << 'w';
      if (k > 1) os << '^' << k;
    }
    first = false;
  };
  for (int k = 0; k < d_; ++k)
    if (best[k] > 0) term(k, best[k]);
  for (int k = 0; k < d_; ++k)
    if (best[k] < 0) term(k, best[k]);
  if (first) os << '0';
  return os.str();
}

}  // namespace hbell
