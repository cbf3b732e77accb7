#include "spinlift/stiefel_whitney.hpp"

#include <stdexcept>

namespace spinlift {

H2Class::H2Class(int e_cup_coef, int w2_std_coef, int n)
    : e_cup_(e_cup_coef & 1), w2_std_(w2_std_coef & 1), n_(n) {
  if (n_ < 2) throw std::invalid_argument("H2Class: need n >= 2");
  if (n_ < 4 && w2_std_ != 0)
    throw std::invalid_argument(
        "H2Class: for n = 2, 3 the cohomology is 1-dimensional");
}

H2Class operator+(const H2Class& a, const H2Class& b) {
  if (a.n_ != b.n_)
    throw std::invalid_argument("H2Class: addition across different groups");
  return H2Class(a.e_cup_ ^ b.e_cup_, a.w2_std_ ^ b.w2_std_, a.n_);
}

H1Class w1_from_counts(const BigInt& g) { return H1Class{bit_of(g, 0)}; }

H2Class w2_from_counts(const BigInt& g, const BigInt& h, int n) {
  int e_cup = bit_of(g >> 1, 0);  // [g/2] mod 2, g >= 0
  int w2_std = n >= 4 ? bit_of(h >> 1, 0) : 0;
  return H2Class(e_cup, w2_std, n);
}

H1Class w1_of(const RepDescriptor& rep) {
  return w1_from_counts(g_and_h(triple_of(rep)).g);
}

H2Class w2_of(const RepDescriptor& rep) {
  if (rep.n() < 2) throw std::invalid_argument("w2_of: need n >= 2");
  GhPair gh = g_and_h(triple_of(rep));
  return w2_from_counts(gh.g, gh.h, rep.n());
}

bool spin_via_w(const RepDescriptor& rep) {
  GhPair gh = g_and_h(triple_of(rep));
  H2Class w1_squared(bit_of(gh.g, 0), 0, rep.n());
  return w2_from_counts(gh.g, gh.h, rep.n()) == w1_squared;
}

std::pair<int, int> restriction_phi(const H2Class& c) {
  if (c.n() < 4)
    throw std::invalid_argument("restriction_phi: defined for n >= 4");
  return {c.e_cup_coef(), c.w2_std_coef()};
}

std::pair<H1Class, H1Class> w1_product(const RepDescriptor& left,
                                       const RepDescriptor& right) {
  CharTriple tl = triple_of(left);
  CharTriple tr = triple_of(right);
  GhPair gl = g_and_h(tl);
  GhPair gr = g_and_h(tr);
  return {H1Class{bit_of(tr.degree * gl.g, 0)},
          H1Class{bit_of(tl.degree * gr.g, 0)}};
}

namespace {

// deg' * w2(pi) + C(binom_arg, 2) * (w1(pi) cup w1(pi)) in one slot of the
// Kunneth decomposition.  binom_arg is deg' for the product formula itself
// and deg' + 1 for the spinoriality test.
H2Class side_class(const GhPair& gh, const BigInt& other_deg,
                   const BigInt& binom_arg, int n) {
  H2Class base = w2_from_counts(gh.g, gh.h, n);
  int scale = bit_of(other_deg, 0);
  H2Class scaled(scale & base.e_cup_coef(), scale & base.w2_std_coef(), n);
  int cup = choose2_parity(binom_arg) & bit_of(gh.g, 0);
  return scaled + H2Class(cup, 0, n);
}

}  // namespace

H2ProductClass w2_product(const RepDescriptor& left, const RepDescriptor& right) {
  CharTriple tl = triple_of(left);
  CharTriple tr = triple_of(right);
  GhPair gl = g_and_h(tl);
  GhPair gr = g_and_h(tr);
  H2Class l = side_class(gl, tr.degree, tr.degree, left.n());
  H2Class r = side_class(gr, tl.degree, tl.degree, right.n());
  int cross =
      bit_of(tl.degree * tr.degree - 1, 0) & bit_of(gl.g, 0) & bit_of(gr.g, 0);
  return H2ProductClass{l, cross, r};
}

bool product_spin_via_w(const RepDescriptor& left, const RepDescriptor& right) {
  CharTriple tl = triple_of(left);
  CharTriple tr = triple_of(right);
  GhPair gl = g_and_h(tl);
  GhPair gr = g_and_h(tr);
  // Components of w2(Pi) + w1(Pi) cup w1(Pi): as in w2_product but with
  // C(deg+1, 2) cup terms and deg*deg' + 1 on the cross coordinate.
  H2Class l = side_class(gl, tr.degree, tr.degree + 1, left.n());
  H2Class r = side_class(gr, tl.degree, tl.degree + 1, right.n());
  int cross =
      bit_of(tl.degree * tr.degree + 1, 0) & bit_of(gl.g, 0) & bit_of(gr.g, 0);
  return l.zero() && cross == 0 && r.zero();
}

}  // namespace spinlift
