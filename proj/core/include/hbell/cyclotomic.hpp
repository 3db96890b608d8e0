#pragma once

// Exact arithmetic in the ring Z[w], w = exp(2 i pi / d).
//
// An element is stored as integer coefficients on 1, w, ..., w^{d-1} and kept
// reduced modulo the d-th cyclotomic polynomial Phi_d. The reduced vector has
// zeros from index phi(d) upward and is unique per ring element, so equality
// is plain coefficient equality. For prime d this is the familiar rule
// 1 + w + ... + w^{d-1} = 0 with the last coefficient forced to zero.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hbell {

/// Integer coefficients of Phi_d, lowest degree first (size phi(d) + 1).
const std::vector<std::int64_t>& cyclotomic_polynomial(int d);

/// phi(d), the degree of Phi_d.
int totient(int d);

/// w^k as a double-precision complex number, for any integer k.
std::complex<double> root_of_unity(int d, long long k);

class CycNum {
 public:
  /// Zero of Z[w] for the given order.
  explicit CycNum(int d = 2);

  /// Sum of coeffs[k] w^k (any length, exponents taken mod d), canonicalized.
  static CycNum from_coeffs(int d, std::span<const std::int64_t> coeffs);
  static CycNum integer(int d, std::int64_t value);
  /// w^k, k taken mod d.
  static CycNum root(int d, long long k);

  int order() const { return d_; }
  std::span<const std::int64_t> coeffs() const { return c_; }

  CycNum& operator+=(const CycNum& other);
  CycNum& operator-=(const CycNum& other);
  CycNum& operator*=(const CycNum& other);
  CycNum operator-() const;

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend bool operator==(const CycNum&, const CycNum&) = default;
  friend auto operator<=>(const CycNum&, const CycNum&) = default;

  /// Multiply by w^k (cheaper than a general product).
  CycNum times_root(long long k) const;
  CycNum scaled(std::int64_t factor) const;

  /// Complex conjugate: w^k -> w^{d-k}.
  CycNum conj() const;
  bool is_real() const { return conj() == *this; }
  bool is_zero() const;

  /// The exponent k if this element equals w^k.
  std::optional<int> as_root() const;

  /// this / divisor when the quotient lies in Z[w], nullopt otherwise.
  std::optional<CycNum> divided_by(std::int64_t divisor) const;

  std::complex<double> to_complex() const;

  /// Human readable form in powers of w, e.g. "w^2 - 1".
  std::string to_string() const;

 private:
  void require_same_order(const CycNum& other) const;
  void canonicalize();

  int d_;
  std::vector<std::int64_t> c_;
};

inline CycNum conj(const CycNum& a) { return a.conj(); }
inline bool is_real(const CycNum& a) { return a.is_real(); }
inline std::complex<double> to_complex(const CycNum& a) { return a.to_complex(); }

}  // namespace hbell
