#pragma once

// Symmetries of the set H_{d,n} of homogeneous Bell polynomials and the
// orbit classification of F_{d,n} under them.

#include <cstdint>
#include <string>
#include <vector>

#include "hbell/bell_polynomial.hpp"
#include "hbell/params.hpp"

namespace hbell {

/// One group element. On monomial indices r it applies, per party i,
///   t_i = swaps[i] ? d-1-r_i : r_i,   t_i += shifts[i] (mod d),
/// then moves party i to position party_perm[i]. Coefficients are
/// conjugated when `conjugate` is set and then multiplied by w^global_phase.
struct SymmetryOp {
  std::vector<int> party_perm;
  std::vector<int> shifts;
  std::vector<bool> swaps;
  int global_phase = 0;
  bool conjugate = false;

  static SymmetryOp identity(const Params& p);
  /// Throws std::invalid_argument unless the fields fit (d, n).
  void validate(const Params& p) const;
  /// Rank of the image of monomial index `rank`.
  std::size_t map_index(std::size_t rank, const Params& p) const;

  friend bool operator==(const SymmetryOp&, const SymmetryOp&) = default;
};

BellPolynomial apply_symmetry(const SymmetryOp& op, const BellPolynomial& poly);

/// The same group element acting on generating functions:
/// polynomial_of(apply_symmetry(op, f)) == apply_symmetry(op, polynomial_of(f)).
DitFunction apply_symmetry(const SymmetryOp& op, const DitFunction& f);

/// Which generator families span the classification group.
struct GeneratorSet {
  bool permutations = false;  // exchange parties
  bool shifts = true;         // circular substitution r_i -> r_i + 1
  bool swaps = true;          // A_i <-> B_i, r_i -> d-1-r_i
  bool phase = true;          // multiplication by w
  bool conjugation = false;   // complex conjugation of coefficients

  /// Per-party dihedral actions and the global phase.
  static GeneratorSet standard() { return {}; }
  /// Every family, including party permutations and conjugation.
  static GeneratorSet full() { return {true, true, true, true, true}; }

  /// Order of the abstract group the families generate; orbit sizes divide it.
  std::uint64_t group_order(const Params& p) const;
  std::vector<std::string> names() const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};

/// Generators of the chosen families for (d, n).
std::vector<SymmetryOp> generators(const Params& p, const GeneratorSet& set);

struct Orbit {
  std::uint64_t representative = 0;  // smallest function code in the orbit
  std::uint64_t size = 0;
  std::uint64_t real_members = 0;    // members with all-real coefficients
};

struct OrbitTable {
  Params params;
  GeneratorSet generators;
  std::vector<Orbit> orbits;                // ordered by representative
  std::vector<std::uint32_t> orbit_of;      // orbit id per function code
  std::vector<bool> real;                   // real-coefficient flag per code
  std::uint64_t real_total = 0;
  /// Orbits containing at least one real polynomial.
  std::size_t real_orbit_count = 0;
  /// Orbits of the real polynomials under the generators that keep
  /// coefficients real (the phase generator is replaced by -1 when d is even
  /// and dropped otherwise).
  std::size_t real_restricted_orbit_count = 0;
};

OrbitTable classify_orbits(const Params& p, const GeneratorSet& set = GeneratorSet::standard(),
                           std::uint64_t limit = kDefaultEnumerationLimit,
                           unsigned parallelism = 1);

}  // namespace hbell
