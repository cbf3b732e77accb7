#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace spinlift {

/// Dense element of the real Clifford algebra over Euclidean R^d with the
/// relation v*v = -|v|^2.  Coefficients are indexed by blade bitmask: bit j
/// set means the basis vector e_j is a factor of the blade, with factors in
/// increasing index order.
class Multivector {
 public:
  explicit Multivector(int dim);
  static Multivector scalar(int dim, double value);
  static Multivector basis_vector(int dim, int j);
  static Multivector from_vector(std::span<const double> v);  ///< grade-1 embed

  int dim() const { return dim_; }
  double coeff(uint32_t blade) const { return coeffs_[blade]; }
  void set_coeff(uint32_t blade, double value) { coeffs_[blade] = value; }

  Multivector& operator+=(const Multivector& other);
  Multivector& operator-=(const Multivector& other);
  Multivector& operator*=(double scale);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }

  /// Geometric product; anticommuting generators, e_j * e_j = -1.
  friend Multivector operator*(const Multivector& a, const Multivector& b);

  /// Grade involution: negates odd-grade components.
  Multivector grade_involution() const;
  /// Reversal anti-involution: sign (-1)^{k(k-1)/2} on grade k.
  Multivector reversal() const;
  /// Clifford conjugation: reversal of the grade involution.
  Multivector conjugation() const;
  /// Spinor norm N(x) = x * conjugation(x).
  Multivector spinor_norm() const;

  double scalar_part() const { return coeffs_[0]; }
  double max_abs_nonscalar() const;
  /// Coefficients of the grade-1 part as a vector of length dim.
  std::vector<double> grade1() const;

 private:
  int dim_;
  std::vector<double> coeffs_;  // size 2^dim
};

/// Sign of-reordering the concatenation of two canonical blades into
/// canonical order, times the metric contribution (-1)^{|a & b|}.
int blade_product_sign(uint32_t a, uint32_t b);

}  // namespace spinlift
