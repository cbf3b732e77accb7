#include "spinlift/clifford.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace spinlift {

namespace {
constexpr int kMaxDim = 14;  // 2^14 coefficients; enough for every shipped use
}

Multivector::Multivector(int dim) : dim_(dim) {
  if (dim < 0 || dim > kMaxDim)
    throw std::invalid_argument("Multivector: dimension out of range (0..14)");
  coeffs_.assign(size_t{1} << dim, 0.0);
}

Multivector Multivector::scalar(int dim, double value) {
  Multivector m(dim);
  m.coeffs_[0] = value;
  return m;
}

Multivector Multivector::basis_vector(int dim, int j) {
  if (j < 0 || j >= dim) throw std::invalid_argument("basis_vector: bad index");
  Multivector m(dim);
  m.coeffs_[size_t{1} << j] = 1.0;
  return m;
}

Multivector Multivector::from_vector(std::span<const double> v) {
  Multivector m(static_cast<int>(v.size()));
  for (size_t j = 0; j < v.size(); ++j) m.coeffs_[size_t{1} << j] = v[j];
  return m;
}

Multivector& Multivector::operator+=(const Multivector& other) {
  if (dim_ != other.dim_) throw std::invalid_argument("dimension mismatch");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
  if (dim_ != other.dim_) throw std::invalid_argument("dimension mismatch");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator*=(double scale) {
  for (double& c : coeffs_) c *= scale;
  return *this;
}

int blade_product_sign(uint32_t a, uint32_t b) {
  // Count transpositions needed to interleave: for each generator in a, the
  // generators of b below it pass through.
  int swaps = 0;
  uint32_t rest = a >> 1;
  while (rest) {
    swaps += std::popcount(rest & b);
    rest >>= 1;
  }
  int metric = std::popcount(a & b);  // each contraction contributes e_j^2 = -1
  return ((swaps + metric) & 1) ? -1 : 1;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
  Multivector out(a.dim_);
  const size_t n = a.coeffs_.size();
  for (uint32_t i = 0; i < n; ++i) {
    double ca = a.coeffs_[i];
    if (ca == 0.0) continue;
    for (uint32_t j = 0; j < n; ++j) {
      double cb = b.coeffs_[j];
      if (cb == 0.0) continue;
      out.coeffs_[i ^ j] += blade_product_sign(i, j) * ca * cb;
    }
  }
  return out;
}

Multivector Multivector::grade_involution() const {
  Multivector out(*this);
  for (uint32_t i = 0; i < coeffs_.size(); ++i)
    if (std::popcount(i) & 1) out.coeffs_[i] = -out.coeffs_[i];
  return out;
}

Multivector Multivector::reversal() const {
  Multivector out(*this);
  for (uint32_t i = 0; i < coeffs_.size(); ++i) {
    int k = std::popcount(i);
    if ((k * (k - 1) / 2) & 1) out.coeffs_[i] = -out.coeffs_[i];
  }
  return out;
}

Multivector Multivector::conjugation() const {
  return grade_involution().reversal();
}

Multivector Multivector::spinor_norm() const { return *this * conjugation(); }

double Multivector::max_abs_nonscalar() const {
  double worst = 0.0;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    worst = std::max(worst, std::abs(coeffs_[i]));
  return worst;
}

std::vector<double> Multivector::grade1() const {
  std::vector<double> v(static_cast<size_t>(dim_));
  for (int j = 0; j < dim_; ++j) v[static_cast<size_t>(j)] = coeffs_[size_t{1} << j];
  return v;
}

}  // namespace spinlift
