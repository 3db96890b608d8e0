#pragma once

// Multidimensional discrete Fourier transform over Z_d^n,
//   fhat(r) = sum_s w^{r.s} f(s),
// in exact (Z[w]) and double-precision flavours, plus the transform rules
// relating the spectra of simply related functions.

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "hbell/cyc_matrix.hpp"
#include "hbell/cyclotomic.hpp"
#include "hbell/multi_index.hpp"
#include "hbell/params.hpp"

namespace hbell {

using Spectrum = std::vector<CycNum>;
using ComplexVector = std::vector<std::complex<double>>;

/// Raised by the exact inverse transform when the input is not D times a
/// vector over Z[w].
class NotASpectrumError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Direct O(D^2) summation.
Spectrum dft(std::span<const CycNum> f, const Params& p);
/// Same transform, one coordinate at a time (O(D n d)).
Spectrum dft_fast(std::span<const CycNum> f, const Params& p);
/// f(s) = D^{-1} sum_r w^{-r.s} g(r); throws NotASpectrumError on non-divisibility.
std::vector<CycNum> idft(std::span<const CycNum> g, const Params& p);

ComplexVector dft(std::span<const std::complex<double>> f, const Params& p);
ComplexVector idft(std::span<const std::complex<double>> g, const Params& p);

/// H_d^{(x)n} = (w^{r.s}), assembled from blocks w^{ij} H_d^{(x)(n-1)}.
CycMatrix build_matrix(const Params& p, std::size_t dim_limit = kDefaultMatrixDimLimit);

// Transform rules. Each returns g built from f; the matching spectrum identity
// is noted alongside.

/// g(s) = f(-s); ghat(r) = fhat(-r).
std::vector<CycNum> negate_rule(std::span<const CycNum> f, const Params& p);
/// g(s) = f(-s)*; ghat(r) = fhat(r)*.
std::vector<CycNum> conj_rule(std::span<const CycNum> f, const Params& p);
/// g(s) = f(s + delta); ghat(r) = w^{-r.delta} fhat(r).
std::vector<CycNum> shift_rule(std::span<const CycNum> f, const MultiIndex& delta, const Params& p);
/// g(s) = w^{delta.s} f(s); ghat(r) = fhat(r + delta).
std::vector<CycNum> modulation_rule(std::span<const CycNum> f, const MultiIndex& delta,
                                    const Params& p);
/// g(s) = f(sigma(s)) with sigma(s) = (s_{sigma(0)}, ..., s_{sigma(n-1)});
/// ghat(r) = fhat(sigma(r)). `sigma` is a 0-based permutation of the parties.
std::vector<CycNum> permute_rule(std::span<const CycNum> f, std::span<const int> sigma,
                                 const Params& p);

/// Rank of sigma(s) for every rank s.
std::vector<std::size_t> permuted_ranks(std::span<const int> sigma, const Params& p);

}  // namespace hbell
