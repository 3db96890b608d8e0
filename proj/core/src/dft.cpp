#include "hbell/dft.hpp"

#include <algorithm>

namespace hbell {
namespace {

void require_length(std::size_t len, const Params& p) {
  if (len != p.D()) {
    throw std::invalid_argument("vector length " + std::to_string(len) + " does not match D = " +
                                std::to_string(p.D()));
  }
}

}  // namespace

Spectrum dft(std::span<const CycNum> f, const Params& p) {
  require_length(f.size(), p);
  const IndexTable idx(p);
  Spectrum out(p.D(), CycNum(p.d()));
  for (std::size_t r = 0; r < p.D(); ++r) {
    for (std::size_t s = 0; s < p.D(); ++s) out[r] += f[s].times_root(idx.dot(r, s));
  }
  return out;
}

Spectrum dft_fast(std::span<const CycNum> f, const Params& p) {
  require_length(f.size(), p);
  const std::size_t d = static_cast<std::size_t>(p.d());
  std::vector<CycNum> cur(f.begin(), f.end());
  std::size_t stride = 1;
  for (int axis = 0; axis < p.n(); ++axis) {
    std::vector<CycNum> next(p.D(), CycNum(p.d()));
    for (std::size_t base = 0; base < p.D(); ++base) {
      if ((base / stride) % d != 0) continue;
      for (std::size_t r = 0; r < d; ++r) {
        CycNum acc(p.d());
        for (std::size_t s = 0; s < d; ++s) {
          acc += cur[base + s * stride].times_root(static_cast<long long>(r * s));
        }
        next[base + r * stride] = std::move(acc);
      }
    }
    cur = std::move(next);
    stride *= d;
  }
  return cur;
}

std::vector<CycNum> idft(std::span<const CycNum> g, const Params& p) {
  require_length(g.size(), p);
  const IndexTable idx(p);
  std::vector<CycNum> out;
  out.reserve(p.D());
  for (std::size_t s = 0; s < p.D(); ++s) {
    CycNum acc(p.d());
    for (std::size_t r = 0; r < p.D(); ++r) acc += g[r].times_root(-idx.dot(r, s));
    auto q = acc.divided_by(static_cast<std::int64_t>(p.D()));
    if (!q) {
      throw NotASpectrumError("inverse transform at rank " + std::to_string(s) +
                              " is not divisible by D = " + std::to_string(p.D()));
    }
    out.push_back(std::move(*q));
  }
  return out;
}

namespace {

ComplexVector complex_transform(std::span<const std::complex<double>> f, const Params& p,
                                int sign) {
  require_length(f.size(), p);
  const std::size_t d = static_cast<std::size_t>(p.d());
  std::vector<std::complex<double>> roots(d);
  for (std::size_t k = 0; k < d; ++k) roots[k] = root_of_unity(p.d(), sign * static_cast<long long>(k));
  ComplexVector cur(f.begin(), f.end());
  std::size_t stride = 1;
  for (int axis = 0; axis < p.n(); ++axis) {
    ComplexVector next(p.D());
    for (std::size_t base = 0; base < p.D(); ++base) {
      if ((base / stride) % d != 0) continue;
      for (std::size_t r = 0; r < d; ++r) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t s = 0; s < d; ++s) acc += roots[(r * s) % d] * cur[base + s * stride];
        next[base + r * stride] = acc;
      }
    }
    cur = std::move(next);
    stride *= d;
  }
  return cur;
}

}  // namespace

ComplexVector dft(std::span<const std::complex<double>> f, const Params& p) {
  return complex_transform(f, p, +1);
}

ComplexVector idft(std::span<const std::complex<double>> g, const Params& p) {
  ComplexVector out = complex_transform(g, p, -1);
  const double scale = 1.0 / static_cast<double>(p.D());
  for (auto& x : out) x *= scale;
  return out;
}

CycMatrix build_matrix(const Params& p, std::size_t dim_limit) {
  if (p.D() > dim_limit) {
    throw LimitError("matrix dimension " + std::to_string(p.D()) + " exceeds limit " +
                     std::to_string(dim_limit));
  }
  const int d = p.d();
  CycMatrix h = CycMatrix::identity(d, 1);
  // The new coordinate is the slowest one, so it indexes the outer blocks.
  for (int level = 1; level <= p.n(); ++level) {
    const std::size_t inner = h.dim();
    CycMatrix next(d, inner * static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        for (std::size_t a = 0; a < inner; ++a) {
          for (std::size_t b = 0; b < inner; ++b) {
            next(i * inner + a, j * inner + b) = h(a, b).times_root(static_cast<long long>(i) * j);
          }
        }
      }
    }
    h = std::move(next);
  }
  return h;
}

std::vector<CycNum> negate_rule(std::span<const CycNum> f, const Params& p) {
  require_length(f.size(), p);
  const IndexTable idx(p);
  std::vector<CycNum> g;
  g.reserve(p.D());
  for (std::size_t s = 0; s < p.D(); ++s) g.push_back(f[idx.negated(s)]);
  return g;
}

std::vector<CycNum> conj_rule(std::span<const CycNum> f, const Params& p) {
  auto g = negate_rule(f, p);
  for (auto& x : g) x = x.conj();
  return g;
}

std::vector<CycNum> shift_rule(std::span<const CycNum> f, const MultiIndex& delta, const Params& p) {
  require_length(f.size(), p);
  const IndexTable idx(p);
  const std::size_t dr = rank(delta, p);
  std::vector<CycNum> g;
  g.reserve(p.D());
  for (std::size_t s = 0; s < p.D(); ++s) g.push_back(f[idx.added(s, dr)]);
  return g;
}

std::vector<CycNum> modulation_rule(std::span<const CycNum> f, const MultiIndex& delta,
                                    const Params& p) {
  require_length(f.size(), p);
  const IndexTable idx(p);
  const std::size_t dr = rank(delta, p);
  std::vector<CycNum> g;
  g.reserve(p.D());
  for (std::size_t s = 0; s < p.D(); ++s) g.push_back(f[s].times_root(idx.dot(dr, s)));
  return g;
}

std::vector<std::size_t> permuted_ranks(std::span<const int> sigma, const Params& p) {
  if (sigma.size() != static_cast<std::size_t>(p.n())) {
    throw std::invalid_argument("permutation size does not match n");
  }
  std::vector<int> check(sigma.begin(), sigma.end());
  std::sort(check.begin(), check.end());
  for (int i = 0; i < p.n(); ++i) {
    if (check[i] != i) throw std::invalid_argument("not a permutation of the parties");
  }
  const IndexTable idx(p);
  std::vector<std::size_t> out(p.D());
  for (std::size_t s = 0; s < p.D(); ++s) {
    std::size_t r = 0;
    for (int i = p.n(); i-- > 0;) r = r * p.d() + static_cast<std::size_t>(idx.digit(s, sigma[i]));
    out[s] = r;
  }
  return out;
}

std::vector<CycNum> permute_rule(std::span<const CycNum> f, std::span<const int> sigma,
                                 const Params& p) {
  require_length(f.size(), p);
  const auto perm = permuted_ranks(sigma, p);
  std::vector<CycNum> g;
  g.reserve(p.D());
  for (std::size_t s = 0; s < p.D(); ++s) g.push_back(f[perm[s]]);
  return g;
}

}  // namespace hbell
