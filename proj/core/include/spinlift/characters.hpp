#pragma once

#include <utility>

#include "spinlift/bigint.hpp"
#include "spinlift/partition.hpp"

namespace spinlift {

/// Cycle type of a permutation: the multiset of cycle lengths including
/// fixed points, stored as a partition of n.
class CycleType {
 public:
  explicit CycleType(Partition lengths) : lengths_(std::move(lengths)) {}

  /// mu with (n - |mu|) fixed points appended.
  static CycleType padded(const Partition& mu, int n);

  const Partition& lengths() const { return lengths_; }
  int n() const { return lengths_.size(); }

 private:
  Partition lengths_;
};

/// Exact character values at the identity, at a transposition, and at a
/// product of two disjoint transpositions.  These three numbers are the sole
/// input to every classification criterion in this library.
struct CharTriple {
  BigInt degree;
  BigInt at_s1;
  BigInt at_s1s3;
  int n = 0;
  /// False when n < 4: no product of two disjoint transpositions exists and
  /// at_s1s3 is stored equal to degree by convention (so h = 0 and the
  /// corresponding lifting condition is vacuous).
  bool s1s3_valid = true;
};

/// Throws std::invalid_argument if t violates the triple invariants
/// (|values| bounded by degree, degree - at_s1 even, degree - at_s1s3
/// divisible by 4).
void validate_triple(const CharTriple& t);

/// g = multiplicity of eigenvalue -1 at a transposition,
/// h = multiplicity of eigenvalue -1 at a product of two disjoint
/// transpositions.  h is always even for genuine representations.
struct GhPair {
  BigInt g;
  BigInt h;
};

/// Character of the Specht module of the given shape at an arbitrary cycle
/// type, by the Murnaghan-Nakayama border-strip recursion (memoized per
/// call, so concurrent invocations are independent).
BigInt character_value(const Partition& shape, const CycleType& cycles);

/// Number of standard Young tableaux of skew shape outer/inner; 0 when the
/// inner diagram is not contained in the outer one.  Evaluated through the
/// Aitken determinant det[1/(outer_i - inner_j - i + j)!] * (|outer|-|inner|)!
/// with factorials cleared, using fraction-free Bareiss elimination over
/// exact integers.  The convention 1/m! = 0 for m < 0 makes containment
/// failures vanish automatically.
BigInt skew_syt_count(const Partition& outer, const Partition& inner);

/// Triple for the Specht module of the given shape (degree by hook lengths,
/// the other two values by Murnaghan-Nakayama).
CharTriple specht_triple(const Partition& shape);

/// Triple for the permutation module on ordered set partitions of the given
/// shape, from the fixed-point counting formulas.
CharTriple perm_module_triple(const Partition& shape);

/// Triple of multiplicity * rep.  multiplicity must be positive.
CharTriple scaled_triple(const CharTriple& t, const BigInt& multiplicity);

/// Triple of a direct sum.  Both summands must live over the same n.
CharTriple add_triples(const CharTriple& a, const CharTriple& b);

/// Extracts (g, h) from a triple; throws on parity violations, which signal
/// corrupted input.
GhPair g_and_h(const CharTriple& t);

/// (g, h) through skew tableau counts: g = f_{shape/(1,1)},
/// h = 2 (f_{shape/(3,1)} + f_{shape/(2,1,1)}).
GhPair skew_g_h(const Partition& shape);

/// Character value at the cycle type mu padded with fixed points, evaluated
/// by the skew expansion  sum over nu of |mu| of chi_nu(mu) * f_{shape/nu}.
/// Used as an independent consistency route against character_value.
BigInt character_via_skew(const Partition& shape, const Partition& mu);

}  // namespace spinlift
