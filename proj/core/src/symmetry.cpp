#include "hbell/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "hbell/multi_index.hpp"
#include "hbell/parallel.hpp"

namespace hbell {
namespace {

int mod(long long k, int d) {
  long long r = k % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

// Action on exponent vectors of the form e'(s) = sign * e(source[s]) + offset[s].
struct AffineAction {
  std::vector<std::size_t> source;
  int sign = 1;
  std::vector<int> offset;

  static AffineAction identity(const Params& p) {
    AffineAction a;
    a.source.resize(p.D());
    for (std::size_t s = 0; s < p.D(); ++s) a.source[s] = s;
    a.offset.assign(p.D(), 0);
    return a;
  }

  // Apply `this` first, then `next`.
  AffineAction then(const AffineAction& next, int d) const {
    AffineAction out;
    const std::size_t D = source.size();
    out.source.resize(D);
    out.offset.resize(D);
    out.sign = next.sign * sign;
    for (std::size_t s = 0; s < D; ++s) {
      out.source[s] = source[next.source[s]];
      out.offset[s] = mod(static_cast<long long>(next.sign) * offset[next.source[s]] + next.offset[s], d);
    }
    return out;
  }

  void apply(std::span<const int> in, std::span<int> out, int d) const {
    for (std::size_t s = 0; s < source.size(); ++s) out[s] = mod(sign * in[source[s]] + offset[s], d);
  }
};

AffineAction function_action(const SymmetryOp& op, const Params& p) {
  const int d = p.d();
  const IndexTable idx(p);
  AffineAction total = AffineAction::identity(p);

  // swap_i: g(t) = w^{t_i} f(t with t_i negated), so ghat(r) = fhat(r with r_i -> d-1-r_i).
  for (int i = 0; i < p.n(); ++i) {
    if (!op.swaps[i]) continue;
    AffineAction step = AffineAction::identity(p);
    for (std::size_t t = 0; t < p.D(); ++t) {
      MultiIndex m = decode(t, p);
      m.digits[i] = mod(-m.digits[i], d);
      step.source[t] = rank(m, p);
      step.offset[t] = idx.digit(t, i);
    }
    total = total.then(step, d);
  }
  // shift_i by k: g(s) = w^{-k s_i} f(s), so ghat(r) = fhat(r - k e_i).
  for (int i = 0; i < p.n(); ++i) {
    if (op.shifts[i] == 0) continue;
    AffineAction step = AffineAction::identity(p);
    for (std::size_t s = 0; s < p.D(); ++s) step.offset[s] = mod(-static_cast<long long>(op.shifts[i]) * idx.digit(s, i), d);
    total = total.then(step, d);
  }
  // Party permutation acts on s exactly as on r.
  {
    AffineAction step = AffineAction::identity(p);
    for (std::size_t s = 0; s < p.D(); ++s) {
      std::size_t src = 0;
      for (int i = p.n(); i-- > 0;) src = src * d + static_cast<std::size_t>(idx.digit(s, op.party_perm[i]));
      step.source[s] = src;
    }
    total = total.then(step, d);
  }
  // Conjugate coefficients: g(s) = f(-s)*.
  if (op.conjugate) {
    AffineAction step = AffineAction::identity(p);
    step.sign = -1;
    for (std::size_t s = 0; s < p.D(); ++s) step.source[s] = idx.negated(s);
    total = total.then(step, d);
  }
  if (mod(op.global_phase, d) != 0) {
    AffineAction step = AffineAction::identity(p);
    step.offset.assign(p.D(), mod(op.global_phase, d));
    total = total.then(step, d);
  }
  return total;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(out, base, &out)) throw LimitError("group order overflows 64 bits");
  }
  return out;
}

}  // namespace

SymmetryOp SymmetryOp::identity(const Params& p) {
  SymmetryOp op;
  op.party_perm.resize(static_cast<std::size_t>(p.n()));
  for (int i = 0; i < p.n(); ++i) op.party_perm[i] = i;
  op.shifts.assign(static_cast<std::size_t>(p.n()), 0);
  op.swaps.assign(static_cast<std::size_t>(p.n()), false);
  return op;
}

void SymmetryOp::validate(const Params& p) const {
  const auto n = static_cast<std::size_t>(p.n());
  if (party_perm.size() != n || shifts.size() != n || swaps.size() != n) {
    throw std::invalid_argument("symmetry op does not match the number of parties");
  }
  std::vector<int> sorted = party_perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (sorted[i] != static_cast<int>(i)) throw std::invalid_argument("party_perm is not a permutation");
  }
  for (int k : shifts) {
    if (k < 0 || k >= p.d()) throw std::invalid_argument("shift out of [0, d)");
  }
  if (global_phase < 0 || global_phase >= p.d()) throw std::invalid_argument("global phase out of [0, d)");
}

std::size_t SymmetryOp::map_index(std::size_t r, const Params& p) const {
  const MultiIndex in = decode(r, p);
  MultiIndex out{std::vector<int>(in.digits.size())};
  for (int i = 0; i < p.n(); ++i) {
    int t = swaps[i] ? p.d() - 1 - in.digits[i] : in.digits[i];
    t = (t + shifts[i]) % p.d();
    out.digits[party_perm[i]] = t;
  }
  return rank(out, p);
}

BellPolynomial apply_symmetry(const SymmetryOp& op, const BellPolynomial& poly) {
  const Params& p = poly.params;
  op.validate(p);
  if (poly.coeffs.size() != p.D()) throw std::invalid_argument("polynomial shape mismatch");
  BellPolynomial out{p, std::vector<CycNum>(p.D(), CycNum(p.d()))};
  for (std::size_t r = 0; r < p.D(); ++r) {
    CycNum c = op.conjugate ? poly.coeffs[r].conj() : poly.coeffs[r];
    out.coeffs[op.map_index(r, p)] = c.times_root(op.global_phase);
  }
  return out;
}

DitFunction apply_symmetry(const SymmetryOp& op, const DitFunction& f) {
  const Params& p = f.params();
  op.validate(p);
  const AffineAction action = function_action(op, p);
  std::vector<int> out(p.D());
  action.apply(f.exponents(), out, p.d());
  return DitFunction::from_exponents(p, std::move(out));
}

std::uint64_t GeneratorSet::group_order(const Params& p) const {
  const auto d = static_cast<std::uint64_t>(p.d());
  std::uint64_t local = 1;
  if (shifts) local *= d;
  if (swaps) local *= 2;
  std::uint64_t order = checked_pow(local, p.n());
  if (permutations) {
    for (int k = 2; k <= p.n(); ++k) {
      if (__builtin_mul_overflow(order, static_cast<std::uint64_t>(k), &order)) {
        throw LimitError("group order overflows 64 bits");
      }
    }
  }
  if (phase) order *= d;
  if (conjugation) order *= 2;
  return order;
}

std::vector<std::string> GeneratorSet::names() const {
  std::vector<std::string> out;
  if (permutations) out.emplace_back("permutations");
  if (shifts) out.emplace_back("shifts");
  if (swaps) out.emplace_back("swaps");
  if (phase) out.emplace_back("phase");
  if (conjugation) out.emplace_back("conjugation");
  return out;
}

std::vector<SymmetryOp> generators(const Params& p, const GeneratorSet& set) {
  std::vector<SymmetryOp> gens;
  const SymmetryOp id = SymmetryOp::identity(p);
  if (set.permutations && p.n() >= 2) {
    // A transposition and an n-cycle generate the symmetric group.
    SymmetryOp t = id;
    std::swap(t.party_perm[0], t.party_perm[1]);
    gens.push_back(t);
    if (p.n() > 2) {
      SymmetryOp c = id;
      for (int i = 0; i < p.n(); ++i) c.party_perm[i] = (i + 1) % p.n();
      gens.push_back(c);
    }
  }
  for (int i = 0; i < p.n(); ++i) {
    if (set.shifts) {
      SymmetryOp op = id;
      op.shifts[i] = 1 % p.d();
      gens.push_back(op);
    }
    if (set.swaps) {
      SymmetryOp op = id;
      op.swaps[i] = true;
      gens.push_back(op);
    }
  }
  if (set.phase) {
    SymmetryOp op = id;
    op.global_phase = 1;
    gens.push_back(op);
  }
  if (set.conjugation) {
    SymmetryOp op = id;
    op.conjugate = true;
    gens.push_back(op);
  }
  return gens;
}

namespace {

std::uint64_t encode(std::span<const int> e, int d) {
  std::uint64_t c = 0;
  for (int x : e) c = c * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(x);
  return c;
}

void decode_into(std::uint64_t code, std::span<int> e, int d) {
  for (std::size_t k = e.size(); k-- > 0;) {
    e[k] = static_cast<int>(code % static_cast<std::uint64_t>(d));
    code /= static_cast<std::uint64_t>(d);
  }
}

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

// Connected components of the graph whose vertices are the codes with
// include[code] set and whose edges are the given actions. Returns the
// component id per code (kUnvisited outside `include`) and the number of
// components; components are numbered by increasing smallest code.
std::pair<std::vector<std::uint32_t>, std::size_t> components(
    const Params& p, std::uint64_t count, const std::vector<AffineAction>& actions,
    const std::vector<bool>* include) {
  const int d = p.d();
  std::vector<std::uint32_t> comp(count, kUnvisited);
  std::vector<int> cur(p.D());
  std::vector<int> img(p.D());
  std::deque<std::uint64_t> queue;
  std::size_t next_id = 0;
  for (std::uint64_t start = 0; start < count; ++start) {
    if (comp[start] != kUnvisited || (include && !(*include)[start])) continue;
    const auto id = static_cast<std::uint32_t>(next_id++);
    comp[start] = id;
    queue.push_back(start);
    while (!queue.empty()) {
      const std::uint64_t code = queue.front();
      queue.pop_front();
      decode_into(code, cur, d);
      for (const auto& action : actions) {
        action.apply(cur, img, d);
        const std::uint64_t next = encode(img, d);
        if (comp[next] == kUnvisited && (!include || (*include)[next])) {
          comp[next] = id;
          queue.push_back(next);
        }
      }
    }
  }
  return {std::move(comp), next_id};
}

}  // namespace

OrbitTable classify_orbits(const Params& p, const GeneratorSet& set, std::uint64_t limit,
                           unsigned parallelism) {
  p.require_enumerable(limit);
  const std::uint64_t count = *p.function_count();
  if (count > kUnvisited) throw LimitError("too many functions for 32-bit orbit ids");

  OrbitTable table{p, set, {}, {}, {}, 0, 0, 0};

  // Real-coefficient flags, evaluated exactly on the spectrum.
  std::vector<char> real(count, 0);
  parallel_for(count, parallelism, [&](std::size_t code) {
    real[code] = polynomial_of(DitFunction::from_code(p, code)).is_real() ? 1 : 0;
  });
  table.real.assign(real.begin(), real.end());
  table.real_total = static_cast<std::uint64_t>(std::count(real.begin(), real.end(), 1));

  std::vector<AffineAction> actions;
  std::vector<AffineAction> real_actions;
  for (const auto& g : generators(p, set)) {
    actions.push_back(function_action(g, p));
    if (g.global_phase == 0) real_actions.push_back(actions.back());
  }
  if (set.phase && p.d() % 2 == 0) {
    // w^{d/2} = -1 keeps real coefficients real.
    SymmetryOp minus = SymmetryOp::identity(p);
    minus.global_phase = p.d() / 2;
    real_actions.push_back(function_action(minus, p));
  }

  auto [comp, n_orbits] = components(p, count, actions, nullptr);
  table.orbit_of = std::move(comp);
  table.orbits.resize(n_orbits);
  std::vector<bool> seen(n_orbits, false);
  for (std::uint64_t code = 0; code < count; ++code) {
    Orbit& o = table.orbits[table.orbit_of[code]];
    if (!seen[table.orbit_of[code]]) {
      seen[table.orbit_of[code]] = true;
      o.representative = code;
    }
    ++o.size;
    if (real[code]) ++o.real_members;
  }
  table.real_orbit_count = static_cast<std::size_t>(
      std::count_if(table.orbits.begin(), table.orbits.end(), [](const Orbit& o) { return o.real_members > 0; }));

  auto restricted = components(p, count, real_actions, &table.real);
  table.real_restricted_orbit_count = restricted.second;
  return table;
}

}  // namespace hbell
