#pragma once

#include <optional>
#include <string>
#include <utility>

#include "spinlift/bigint.hpp"
#include "spinlift/rep.hpp"

namespace spinlift {

/// Full classification verdict for one representation.
///
/// For symmetric-group verdicts all fields are meaningful.  For alternating
/// groups `chiral` is unset (there is no sign character), `w1_coord` is 0
/// (the determinant is trivial on the subgroup) and `w2_coords.first` is the
/// single obstruction bit in the at-most-1-dimensional degree-2 cohomology.
/// For products the w-coordinates are zeroed; the product classes live in the
/// Kunneth decomposition and are reported by w2_product instead.
struct SpinReport {
  int n = 0;
  int n2 = 0;  ///< second factor size; products only
  BigInt degree;
  BigInt g;
  BigInt h;
  std::optional<bool> chiral;
  bool spinorial = false;
  /// Number of distinct lifts when spinorial: 2 over a symmetric group, 1
  /// over an alternating group, 4 over a product of two symmetric groups;
  /// 0 when aspinorial.
  int lift_count = 0;
  int w1_coord = 0;
  std::pair<int, int> w2_coords{0, 0};
};

enum class AnVariant { Restriction, Plus, Minus };

/// Label of a real irreducible representation of an alternating group:
/// either the restriction of a Specht module, or one of the two split
/// constituents of the restriction of a self-conjugate shape with
/// epsilon = +1.
struct AnIrreducibleLabel {
  Partition shape;
  AnVariant variant;

  /// Validates the case conditions: Plus/Minus require a self-conjugate
  /// shape with epsilon = +1; Restriction requires a non-self-conjugate
  /// shape, or a self-conjugate one with epsilon = -1.
  static AnIrreducibleLabel make(Partition shape, AnVariant variant);
};

/// Symmetric group classification.  Chirality is the parity of g; for
/// n >= 4 the representation lifts iff g is 0 or 3 mod 4 and h is 0 mod 4;
/// for n = 2, 3 the h-condition is vacuous.
SpinReport classify_sn(const RepDescriptor& rep);

/// Restriction of the described representation to the alternating group;
/// lifts iff h is a multiple of 4.  Requires n >= 4 (smaller alternating
/// groups are degenerate and rejected).
SpinReport classify_an_restriction(const RepDescriptor& rep);

/// Real irreducible of the alternating group: the restriction case lifts iff
/// the triple satisfies degree = at_s1s3 mod 8, the split case mod 16.  The
/// Plus and Minus constituents always agree.
SpinReport classify_an_irreducible(const AnIrreducibleLabel& label);

/// External tensor product over a product of two symmetric groups: lifts iff
/// both factor restrictions lift and (deg + 1) g g' is even.
SpinReport classify_product(const RepDescriptor& left, const RepDescriptor& right);

/// The five parity conditions equivalent to product spinoriality:
///   (1) f'h/2, (2) f'[g/2] + C(f'+1,2) g, (3) (ff'+1) g g',
///   (4) f h'/2, (5) f [g'/2] + C(f+1,2) g'  -- all even.
/// h and h' must be even.
bool product_five_conditions(const BigInt& f, const BigInt& g, const BigInt& h,
                             const BigInt& f2, const BigInt& g2, const BigInt& h2);

/// One row of the achiral-and-spinorial density scan over all shapes of n.
struct DensityPoint {
  int n = 0;
  long long achiral_spinorial = 0;
  long long total = 0;  ///< p(n)

  /// Exact fraction in lowest terms, e.g. "2/11".
  std::string fraction() const;
};

/// Counts shapes of n whose Specht module is achiral and spinorial, through
/// the skew-count congruences (g = 0 mod 4 and h = 0 mod 4).  The partition
/// stream may be split across worker threads; the result is independent of
/// the thread count.
DensityPoint density_sweep(int n, int threads = 1);

}  // namespace spinlift
