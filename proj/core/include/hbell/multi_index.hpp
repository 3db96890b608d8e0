#pragma once

#include <cstddef>
#include <vector>

#include "hbell/params.hpp"

namespace hbell {

/// Element of Z_d^n. Ranks put the first coordinate fastest:
/// rank(s) = s_1 + d s_2 + ... + d^{n-1} s_n.
struct MultiIndex {
  std::vector<int> digits;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

MultiIndex decode(std::size_t rank, const Params& p);
std::size_t rank(const MultiIndex& s, const Params& p);

/// r . s mod d.
int dot_mod(const MultiIndex& r, const MultiIndex& s, const Params& p);

/// Componentwise a + b mod d, and -a mod d.
MultiIndex add(const MultiIndex& a, const MultiIndex& b, const Params& p);
MultiIndex negate(const MultiIndex& a, const Params& p);

/// Precomputed digits and products for every rank, for the hot loops that
/// sweep Z_d^n many times.
class IndexTable {
 public:
  explicit IndexTable(const Params& p);

  const Params& params() const { return params_; }
  int digit(std::size_t rank, int party) const { return digits_[rank * n_ + party]; }
  /// r . s mod d for ranks r and s.
  int dot(std::size_t r, std::size_t s) const;
  /// rank of -s.
  std::size_t negated(std::size_t s) const { return negated_[s]; }
  /// rank of s + t.
  std::size_t added(std::size_t s, std::size_t t) const;

 private:
  Params params_;
  std::size_t n_;
  std::vector<int> digits_;
  std::vector<std::size_t> negated_;
};

}  // namespace hbell
