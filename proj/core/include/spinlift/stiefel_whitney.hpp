#pragma once

#include <utility>

#include "spinlift/bigint.hpp"
#include "spinlift/rep.hpp"

namespace spinlift {

/// Element of the first mod-2 cohomology of a symmetric group: a single bit,
/// the coefficient of the sign character.  Addition is XOR.
struct H1Class {
  int sgn_coef = 0;

  friend H1Class operator+(H1Class a, H1Class b) {
    return H1Class{a.sgn_coef ^ b.sgn_coef};
  }
  friend bool operator==(H1Class, H1Class) = default;
};

/// Element of the second mod-2 cohomology of a symmetric group, written in
/// the basis {e_cup, w2(standard)} where e_cup = w1(sgn) cup w1(sgn).  For
/// n = 2, 3 the group is 1-dimensional and the second coordinate is forced
/// to 0.
class H2Class {
 public:
  H2Class(int e_cup_coef, int w2_std_coef, int n);

  int e_cup_coef() const { return e_cup_; }
  int w2_std_coef() const { return w2_std_; }
  int n() const { return n_; }
  bool zero() const { return e_cup_ == 0 && w2_std_ == 0; }

  friend H2Class operator+(const H2Class& a, const H2Class& b);
  friend bool operator==(const H2Class&, const H2Class&) = default;

 private:
  int e_cup_ = 0;
  int w2_std_ = 0;
  int n_ = 0;
};

/// Degree-2 class of a product group, under the Kunneth decomposition
/// H2(G x G') = H2(G) + H1(G) (x) H1(G') + H2(G').  The cross coordinate is
/// the coefficient of w1(sgn) (x) w1(sgn).
struct H2ProductClass {
  H2Class left;
  int cross = 0;
  H2Class right;

  bool zero() const { return left.zero() && cross == 0 && right.zero(); }
  friend bool operator==(const H2ProductClass&, const H2ProductClass&) = default;
};

/// Coordinate kernels in terms of the eigenvalue counts (g, h).
H1Class w1_from_counts(const BigInt& g);
H2Class w2_from_counts(const BigInt& g, const BigInt& h, int n);

/// w1 = determinant character; the coefficient is the parity of g.
H1Class w1_of(const RepDescriptor& rep);

/// w2 = [g/2] e_cup + (h/2) w2(standard); the second coordinate is dropped
/// for n = 2, 3 where the cohomology is 1-dimensional.
H2Class w2_of(const RepDescriptor& rep);

/// Spinoriality through characteristic classes: lifts iff
/// w2 = w1 cup w1.  Must agree with the congruence classifier.
bool spin_via_w(const RepDescriptor& rep);

/// Restriction to the two detecting cyclic subgroups (generated by a
/// transposition, resp. a product of two disjoint transpositions).  In basis
/// coordinates the map sends e_cup -> (1,0) and w2(standard) -> (0,1); it is
/// an isomorphism for n >= 4.
std::pair<int, int> restriction_phi(const H2Class& c);

/// w1 of an external tensor product, as its two H1 coordinates:
/// (deg' * w1(left), deg * w1(right)).
std::pair<H1Class, H1Class> w1_product(const RepDescriptor& left,
                                       const RepDescriptor& right);

/// w2 of an external tensor product via the splitting-principle formula.
H2ProductClass w2_product(const RepDescriptor& left, const RepDescriptor& right);

/// Product spinoriality through vanishing of the three Kunneth components of
/// w2 + w1 cup w1.  Must agree with the congruence-based product classifier.
bool product_spin_via_w(const RepDescriptor& left, const RepDescriptor& right);

}  // namespace spinlift
