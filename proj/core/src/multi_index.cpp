#include "hbell/multi_index.hpp"

#include <stdexcept>

namespace hbell {
namespace {

void require_shape(const MultiIndex& s, const Params& p) {
  if (s.digits.size() != static_cast<std::size_t>(p.n())) {
    throw std::invalid_argument("multi-index has " + std::to_string(s.digits.size()) +
                                " digits, expected " + std::to_string(p.n()));
  }
  for (int x : s.digits) {
    if (x < 0 || x >= p.d()) throw std::invalid_argument("multi-index digit out of range");
  }
}

}  // namespace

MultiIndex decode(std::size_t rank, const Params& p) {
  if (rank >= p.D()) throw std::out_of_range("rank out of range");
  MultiIndex s{std::vector<int>(static_cast<std::size_t>(p.n()))};
  for (int i = 0; i < p.n(); ++i) {
    s.digits[i] = static_cast<int>(rank % p.d());
    rank /= p.d();
  }
  return s;
}

std::size_t rank(const MultiIndex& s, const Params& p) {
  require_shape(s, p);
  std::size_t r = 0;
  for (int i = p.n(); i-- > 0;) r = r * p.d() + static_cast<std::size_t>(s.digits[i]);
  return r;
}

int dot_mod(const MultiIndex& r, const MultiIndex& s, const Params& p) {
  require_shape(r, p);
  require_shape(s, p);
  long long acc = 0;
  for (int i = 0; i < p.n(); ++i) acc += static_cast<long long>(r.digits[i]) * s.digits[i];
  return static_cast<int>(acc % p.d());
}

MultiIndex add(const MultiIndex& a, const MultiIndex& b, const Params& p) {
  require_shape(a, p);
  require_shape(b, p);
  MultiIndex out = a;
  for (int i = 0; i < p.n(); ++i) out.digits[i] = (a.digits[i] + b.digits[i]) % p.d();
  return out;
}

MultiIndex negate(const MultiIndex& a, const Params& p) {
  require_shape(a, p);
  MultiIndex out = a;
  for (int& x : out.digits) x = (p.d() - x) % p.d();
  return out;
}

IndexTable::IndexTable(const Params& p)
    : params_(p), n_(static_cast<std::size_t>(p.n())), digits_(p.D() * n_), negated_(p.D()) {
  for (std::size_t r = 0; r < p.D(); ++r) {
    std::size_t x = r;
    for (std::size_t i = 0; i < n_; ++i) {
      digits_[r * n_ + i] = static_cast<int>(x % p.d());
      x /= p.d();
    }
  }
  for (std::size_t r = 0; r < p.D(); ++r) {
    std::size_t neg = 0;
    for (std::size_t i = n_; i-- > 0;) {
      neg = neg * p.d() + static_cast<std::size_t>((p.d() - digit(r, static_cast<int>(i))) % p.d());
    }
    negated_[r] = neg;
  }
}

int IndexTable::dot(std::size_t r, std::size_t s) const {
  int acc = 0;
  const int d = params_.d();
  for (std::size_t i = 0; i < n_; ++i) acc = (acc + digits_[r * n_ + i] * digits_[s * n_ + i]) % d;
  return acc;
}

std::size_t IndexTable::added(std::size_t s, std::size_t t) const {
  std::size_t out = 0;
  const int d = params_.d();
  for (std::size_t i = n_; i-- > 0;) {
    out = out * d + static_cast<std::size_t>((digits_[s * n_ + i] + digits_[t * n_ + i]) % d);
  }
  return out;
}

}  // namespace hbell
