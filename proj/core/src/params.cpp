#include "hbell/params.hpp"

namespace hbell {

Params Params::make(int d, int n, std::size_t max_dimension) {
  if (d < 2 || d > kMaxOrder) {
    throw std::invalid_argument("d must lie in [2, " + std::to_string(kMaxOrder) +
                                "], got " + std::to_string(d));
  }
  if (n < 0) throw std::invalid_argument("n must be >= 0, got " + std::to_string(n));
  std::size_t D = 1;
  for (int i = 0; i < n; ++i) {
    if (D > max_dimension / static_cast<std::size_t>(d)) {
      throw LimitError("d^n = " + std::to_string(d) + "^" + std::to_string(n) +
                       " exceeds the dimension limit " + std::to_string(max_dimension));
    }
    D *= static_cast<std::size_t>(d);
  }
  return Params(d, n, D);
}

std::optional<std::uint64_t> Params::function_count() const {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < D_; ++i) {
    if (__builtin_mul_overflow(count, static_cast<std::uint64_t>(d_), &count)) {
      return std::nullopt;
    }
  }
  return count;
}

void Params::require_enumerable(std::uint64_t limit) const {
  auto count = function_count();
  if (!count || *count > limit) {
    throw LimitError("enumerating d^D functions for " + to_string(*this) +
                     " exceeds the enumeration limit " + std::to_string(limit) +
                     "; work with a single function instead (e.g. --f exponents)");
  }
}

std::string to_string(const Params& p) {
  return "(d=" + std::to_string(p.d()) + ", n=" + std::to_string(p.n()) + ")";
}

bool is_prime(int d) {
  if (d < 2) return false;
  for (int q = 2; q * q <= d; ++q) {
    if (d % q == 0) return false;
  }
  return true;
}

}  // namespace hbell
