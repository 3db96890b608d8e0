#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hbell/cyclotomic.hpp"
#include "hbell/params.hpp"

namespace hbell {

/// A map f : Z_d^n -> {1, w, ..., w^{d-1}}, stored as the exponents of w
/// indexed by multi-index rank.
class DitFunction {
 public:
  static DitFunction from_exponents(const Params& p, std::vector<int> exponents);
  /// Inverse of code(): exponent 0 is the most significant base-d digit, so
  /// increasing codes walk the exponent vectors in lexicographic order.
  static DitFunction from_code(const Params& p, std::uint64_t code);
  static DitFunction constant(const Params& p, int exponent);

  const Params& params() const { return params_; }
  std::span<const int> exponents() const { return exponents_; }
  int exponent(std::size_t rank) const { return exponents_[rank]; }
  CycNum value(std::size_t rank) const { return CycNum::root(params_.d(), exponents_[rank]); }
  std::vector<CycNum> values() const;
  std::uint64_t code() const;

  friend bool operator==(const DitFunction&, const DitFunction&) = default;

 private:
  DitFunction(const Params& p, std::vector<int> e) : params_(p), exponents_(std::move(e)) {}

  Params params_;
  std::vector<int> exponents_;
};

/// Every function of F_{d,n}, addressed by code in [0, d^D).
class FunctionSpace {
 public:
  class iterator {
   public:
    using value_type = DitFunction;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const FunctionSpace* space, std::uint64_t code) : space_(space), code_(code) {}

    DitFunction operator*() const { return space_->at(code_); }
    iterator& operator++() {
      ++code_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++code_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.code_ == b.code_; }

   private:
    const FunctionSpace* space_ = nullptr;
    std::uint64_t code_ = 0;
  };

  FunctionSpace(const Params& p, std::uint64_t count) : params_(p), count_(count) {}

  const Params& params() const { return params_; }
  std::uint64_t size() const { return count_; }
  DitFunction at(std::uint64_t code) const { return DitFunction::from_code(params_, code); }
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count_}; }

 private:
  Params params_;
  std::uint64_t count_;
};

/// All d^D functions in lexicographic order of exponent vectors. Throws
/// LimitError when d^D exceeds `limit`.
FunctionSpace enumerate_functions(const Params& p,
                                  std::uint64_t limit = kDefaultEnumerationLimit);

/// P_f = sum_r fhat(r) A^r, A^r = prod_i A_i^{d-1-r_i} B_i^{r_i}. The
/// coefficient vector is indexed by the rank of r.
struct BellPolynomial {
  Params params;
  std::vector<CycNum> coeffs;

  bool is_real() const;
  /// The f with fhat = coeffs, when it exists (i.e. this lies in H_{d,n}).
  std::optional<DitFunction> generating_function() const;
  bool is_valid() const { return generating_function().has_value(); }
  std::string to_string() const;

  friend bool operator==(const BellPolynomial&, const BellPolynomial&) = default;
};

BellPolynomial polynomial_of(const DitFunction& f);

/// P_0 ⋈ ... ⋈ P_{d-1}: the coefficient of A^{(r', r_n)} is
/// sum_t w^{r_n t} coeff_{P_t}(r').
BellPolynomial bowtie(std::span<const BellPolynomial> parts);

/// "A1^2B1A2" style name of the monomial A^r.
std::string monomial_name(std::size_t rank, const Params& p);
/// Total degree of A^r, always n(d-1).
int monomial_degree(std::size_t rank, const Params& p);

/// The 27 polynomials u(3M + (v - 1)(A^2 + AB + B^2)), u, v in U,
/// M in {A^2, AB, B^2}, for d = 3, n = 1.
std::vector<BellPolynomial> compact_form_polynomials();
/// True iff compact_form_polynomials() equals H_{3,1} as a set.
bool compact_form_check();

}  // namespace hbell
