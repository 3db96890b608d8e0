#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace hbell {

/// Largest number of outcomes supported by the exact cyclotomic arithmetic.
inline constexpr int kMaxOrder = 64;

/// Default cap on D = d^n (DFT values stay well inside int64 below this).
inline constexpr std::size_t kDefaultMaxDimension = std::size_t{1} << 20;

/// Default cap on d^D when every function of Z_d^n -> U is enumerated.
inline constexpr std::uint64_t kDefaultEnumerationLimit = std::uint64_t{1} << 26;

/// Default cap on the dimension of dense quantum operators.
inline constexpr std::size_t kDefaultMatrixDimLimit = 1024;

class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Number of outcomes d, number of parties n and D = d^n.
class Params {
 public:
  /// Throws std::invalid_argument for d outside [2, kMaxOrder] or n < 0,
  /// LimitError when d^n exceeds `max_dimension`.
  static Params make(int d, int n, std::size_t max_dimension = kDefaultMaxDimension);

  int d() const { return d_; }
  int n() const { return n_; }
  std::size_t D() const { return D_; }

  /// d^D, or nullopt if it does not fit in 64 bits.
  std::optional<std::uint64_t> function_count() const;

  /// Throws LimitError unless d^D <= limit.
  void require_enumerable(std::uint64_t limit) const;

  Params with_parties(int n) const { return make(d_, n); }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  Params(int d, int n, std::size_t D) : d_(d), n_(n), D_(D) {}

  int d_;
  int n_;
  std::size_t D_;
};

std::string to_string(const Params& p);

bool is_prime(int d);

}  // namespace hbell
