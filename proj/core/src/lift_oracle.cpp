#include "spinlift/lift_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "spinlift/characters.hpp"

namespace spinlift {

namespace {

constexpr int kMaxCliffordDim = 14;
constexpr double kRankThreshold = 1e-6;
// A scalar sign must be extracted from a clearly scalar element: well away
// from zero, with everything else numerically negligible.
constexpr double kScalarLowerBound = 0.5;
constexpr double kNonScalarBound = 1e-6;

void require_dim(int degree) {
  if (degree > kMaxCliffordDim)
    throw std::invalid_argument(
        "representation degree exceeds the dense Clifford cap of 14");
}

int extract_sign(const Multivector& x) {
  double s = x.scalar_part();
  if (std::abs(s) < kScalarLowerBound || x.max_abs_nonscalar() > kNonScalarBound)
    throw std::runtime_error("lift search: element is not a clean scalar sign");
  return s > 0 ? 1 : -1;
}

Multivector power(const Multivector& x, int e) {
  Multivector acc = x;
  for (int i = 1; i < e; ++i) acc = acc * x;
  return acc;
}

Matrix power(const Matrix& m, int e) {
  Matrix acc = m;
  for (int i = 1; i < e; ++i) acc = acc * m;
  return acc;
}

double relation_residual(const Matrix& m) {
  return (m - Matrix::identity(m.rows())).frobenius_norm();
}

}  // namespace

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      double v = a.at(i, k);
      if (v == 0.0) continue;
      for (int j = 0; j < b.cols_; ++j) c.at(i, j) += v * b.at(k, j);
    }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  Matrix c(a.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double Matrix::trace() const {
  double s = 0.0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) s += at(i, i);
  return s;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      c.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return c;
}

double determinant(const Matrix& m) {
  int n = m.rows();
  Matrix a = m;
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    for (int r = k + 1; r < n; ++r)
      if (std::abs(a.at(r, k)) > std::abs(a.at(pivot, k))) pivot = r;
    if (std::abs(a.at(pivot, k)) < 1e-12) return 0.0;
    if (pivot != k) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(k, j));
      det = -det;
    }
    det *= a.at(k, k);
    for (int r = k + 1; r < n; ++r) {
      double factor = a.at(r, k) / a.at(k, k);
      for (int j = k; j < n; ++j) a.at(r, j) -= factor * a.at(k, j);
    }
  }
  return det;
}

std::vector<std::vector<int>> standard_tableaux(const Partition& shape) {
  std::vector<std::vector<int>> all;
  int n = shape.size();
  std::vector<int> fill(static_cast<size_t>(shape.rows()), 0);
  std::vector<int> row_of(static_cast<size_t>(n), 0);

  auto place = [&](auto&& self, int entry) -> void {
    if (entry == n) {
      all.push_back(row_of);
      return;
    }
    for (int r = 0; r < shape.rows(); ++r) {
      if (fill[static_cast<size_t>(r)] >= shape.part(r)) continue;
      if (r > 0 && fill[static_cast<size_t>(r - 1)] <= fill[static_cast<size_t>(r)])
        continue;
      fill[static_cast<size_t>(r)]++;
      row_of[static_cast<size_t>(entry)] = r;
      self(self, entry + 1);
      fill[static_cast<size_t>(r)]--;
    }
  };
  place(place, 0);
  return all;
}

OrthogonalRep young_orthogonal_matrices(const Partition& shape) {
  int n = shape.size();
  if (n < 2)
    throw std::invalid_argument("young_orthogonal_matrices: need |shape| >= 2");

  auto tableaux = standard_tableaux(shape);
  int d = static_cast<int>(tableaux.size());
  std::map<std::vector<int>, int> index;
  for (int t = 0; t < d; ++t) index[tableaux[static_cast<size_t>(t)]] = t;

  // Column of entry m: how many earlier entries share its row.
  auto column_of = [](const std::vector<int>& row_of, int entry) {
    int col = 0;
    for (int e = 0; e < entry; ++e)
      if (row_of[static_cast<size_t>(e)] == row_of[static_cast<size_t>(entry)]) ++col;
    return col;
  };

  OrthogonalRep rep;
  rep.n = n;
  rep.degree = d;
  rep.kind = GeneratorKind::Symmetric;
  for (int k = 0; k < n - 1; ++k) {  // generator swapping entries k+1, k+2
    Matrix m(d, d);
    for (int t = 0; t < d; ++t) {
      const auto& tab = tableaux[static_cast<size_t>(t)];
      int r1 = tab[static_cast<size_t>(k)], r2 = tab[static_cast<size_t>(k + 1)];
      int c1 = column_of(tab, k), c2 = column_of(tab, k + 1);
      if (r1 == r2) {
        m.at(t, t) = 1.0;
      } else if (c1 == c2) {
        m.at(t, t) = -1.0;
      } else {
        int dist = (c2 - r2) - (c1 - r1);  // axial distance between the entries
        std::vector<int> swapped = tab;
        std::swap(swapped[static_cast<size_t>(k)], swapped[static_cast<size_t>(k + 1)]);
        int t2 = index.at(swapped);
        m.at(t, t) = 1.0 / dist;
        m.at(t, t2) = std::sqrt(1.0 - 1.0 / (static_cast<double>(dist) * dist));
      }
    }
    rep.generators.push_back(std::move(m));
  }
  return rep;
}

OrthogonalRep alternating_generators(const OrthogonalRep& sn_rep) {
  if (sn_rep.kind != GeneratorKind::Symmetric)
    throw std::invalid_argument("alternating_generators: need symmetric-group input");
  if (sn_rep.n < 4)
    throw std::invalid_argument("alternating_generators: need n >= 4");
  OrthogonalRep rep;
  rep.n = sn_rep.n;
  rep.degree = sn_rep.degree;
  rep.kind = GeneratorKind::Alternating;
  for (int i = 1; i <= sn_rep.n - 2; ++i)
    rep.generators.push_back(sn_rep.generators[0] *
                             sn_rep.generators[static_cast<size_t>(i)]);
  return rep;
}

int square_sign(long long g) {
  if (g < 0) throw std::invalid_argument("square_sign: g must be >= 0");
  return (g * (g + 1) / 2) % 2 == 0 ? 1 : -1;
}

namespace {

// Orthonormal basis of the -1 eigenspace of an orthogonal involution, via
// the projector columns.
std::vector<std::vector<double>> negative_eigenbasis(const Matrix& m) {
  int d = m.rows();
  std::vector<std::vector<double>> basis;
  for (int col = 0; col < d; ++col) {
    std::vector<double> v(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i)
      v[static_cast<size_t>(i)] = ((i == col ? 1.0 : 0.0) - m.at(i, col)) / 2.0;
    for (int pass = 0; pass < 2; ++pass) {  // re-orthogonalize once
      for (const auto& u : basis) {
        double dot = 0.0;
        for (int i = 0; i < d; ++i) dot += u[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
        for (int i = 0; i < d; ++i) v[static_cast<size_t>(i)] -= dot * u[static_cast<size_t>(i)];
      }
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > kRankThreshold) {
      for (double& x : v) x /= norm;
      basis.push_back(std::move(v));
    }
  }
  return basis;
}

}  // namespace

Matrix rho_matrix(const Multivector& c) {
  int d = c.dim();
  Multivector norm = c.spinor_norm();
  double n0 = norm.scalar_part();
  if (std::abs(std::abs(n0) - 1.0) > 1e-6 || norm.max_abs_nonscalar() > kNonScalarBound)
    throw std::runtime_error("rho_matrix: element has non-unit spinor norm");
  Multivector cinv = c.conjugation() * (1.0 / n0);
  Multivector alpha = c.grade_involution();

  Matrix out(d, d);
  for (int j = 0; j < d; ++j) {
    Multivector image = alpha * Multivector::basis_vector(d, j) * cinv;
    auto col = image.grade1();
    for (int i = 0; i < d; ++i) out.at(i, j) = col[static_cast<size_t>(i)];
  }
  return out;
}

Multivector candidate_lift(const Matrix& m, double tolerance) {
  int d = m.rows();
  require_dim(d);
  if (relation_residual(m * m) > tolerance)
    throw std::invalid_argument("candidate_lift: matrix is not an involution");

  auto basis = negative_eigenbasis(m);
  // Rank must match the eigenvalue count; a mismatch means the threshold cut
  // through genuine singular values.
  double expected = (d - m.trace()) / 2.0;
  if (std::abs(expected - static_cast<double>(basis.size())) > 1e-6)
    throw std::runtime_error("candidate_lift: ambiguous eigenspace rank");

  Multivector c = Multivector::scalar(d, 1.0);
  for (const auto& v : basis) c = c * Multivector::from_vector(v);

  if ((rho_matrix(c) - m).frobenius_norm() > 1e-7)
    throw std::runtime_error("candidate_lift: twisted conjugation mismatch");
  return c;
}

Multivector lift_orthogonal(const Matrix& m, double tolerance) {
  int d = m.rows();
  require_dim(d);
  if (relation_residual(m * m.transpose()) > tolerance)
    throw std::invalid_argument("lift_orthogonal: matrix is not orthogonal");

  // Householder peeling: reflect the image of each basis vector back onto it.
  Matrix work = m;
  std::vector<std::vector<double>> mirrors;
  for (int j = 0; j < d; ++j) {
    std::vector<double> v(static_cast<size_t>(d));
    double norm = 0.0;
    for (int i = 0; i < d; ++i) {
      v[static_cast<size_t>(i)] = work.at(i, j) - (i == j ? 1.0 : 0.0);
      norm += v[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
    }
    norm = std::sqrt(norm);
    if (norm < 1e-9) continue;  // already fixed
    for (double& x : v) x /= norm;
    // work <- H_v * work
    for (int cc = 0; cc < d; ++cc) {
      double dot = 0.0;
      for (int i = 0; i < d; ++i) dot += v[static_cast<size_t>(i)] * work.at(i, cc);
      for (int i = 0; i < d; ++i) work.at(i, cc) -= 2.0 * dot * v[static_cast<size_t>(i)];
    }
    mirrors.push_back(std::move(v));
  }

  Multivector c = Multivector::scalar(d, 1.0);
  for (const auto& v : mirrors) c = c * Multivector::from_vector(v);
  if ((rho_matrix(c) - m).frobenius_norm() > 1e-7)
    throw std::runtime_error("lift_orthogonal: twisted conjugation mismatch");
  return c;
}

namespace {

double validate_sn_relations(const OrthogonalRep& rep, double tol) {
  double worst = 0.0;
  auto track = [&](double r) {
    worst = std::max(worst, r);
    if (r > tol)
      throw std::runtime_error("relation residual above tolerance");
  };
  int count = static_cast<int>(rep.generators.size());
  if (count != rep.n - 1)
    throw std::invalid_argument("expected n-1 symmetric-group generators");
  for (const auto& m : rep.generators) {
    track(relation_residual(m * m.transpose()));
    track(relation_residual(m * m));
  }
  for (int i = 0; i + 1 < count; ++i)
    track(relation_residual(power(
        rep.generators[static_cast<size_t>(i)] *
            rep.generators[static_cast<size_t>(i + 1)],
        3)));
  for (int i = 0; i < count; ++i)
    for (int k = i + 2; k < count; ++k)
      track(relation_residual(power(
          rep.generators[static_cast<size_t>(i)] *
              rep.generators[static_cast<size_t>(k)],
          2)));
  return worst;
}

double validate_an_relations(const OrthogonalRep& rep, double tol) {
  double worst = 0.0;
  auto track = [&](double r) {
    worst = std::max(worst, r);
    if (r > tol)
      throw std::runtime_error("relation residual above tolerance");
  };
  int count = static_cast<int>(rep.generators.size());
  if (count != rep.n - 2)
    throw std::invalid_argument("expected n-2 alternating-group generators");
  for (const auto& m : rep.generators)
    track(relation_residual(m * m.transpose()));
  track(relation_residual(power(rep.generators[0], 3)));
  for (int j = 1; j < count; ++j)
    track(relation_residual(power(rep.generators[static_cast<size_t>(j)], 2)));
  for (int j = 1; j < count; ++j)
    track(relation_residual(power(
        rep.generators[static_cast<size_t>(j - 1)] *
            rep.generators[static_cast<size_t>(j)],
        3)));
  for (int i = 0; i < count; ++i)
    for (int j = i + 2; j < count; ++j)
      track(relation_residual(power(
          rep.generators[static_cast<size_t>(i)] *
              rep.generators[static_cast<size_t>(j)],
          2)));
  return worst;
}

}  // namespace

LiftSearchResult verify_sn_lift(const OrthogonalRep& rep, const LiftOptions& opt) {
  require_dim(rep.degree);
  if (rep.kind != GeneratorKind::Symmetric)
    throw std::invalid_argument("verify_sn_lift: need symmetric-group generators");
  LiftSearchResult result;
  result.max_residual = validate_sn_relations(rep, opt.tolerance);

  int count = static_cast<int>(rep.generators.size());
  std::vector<Multivector> lifts;
  lifts.reserve(static_cast<size_t>(count));
  for (const auto& m : rep.generators) lifts.push_back(candidate_lift(m, opt.tolerance));

  // Square and commutation conditions do not depend on the sign choices;
  // the braid conditions are always solvable by propagating signs along the
  // chain, with the first sign free.
  bool ok = true;
  std::vector<int> squares(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    squares[static_cast<size_t>(i)] =
        extract_sign(lifts[static_cast<size_t>(i)] * lifts[static_cast<size_t>(i)]);
    if (squares[static_cast<size_t>(i)] != 1) ok = false;
  }
  std::map<std::pair<int, int>, int> comm_signs;
  for (int i = 0; i < count; ++i)
    for (int k = i + 2; k < count; ++k) {
      int s = extract_sign(power(
          lifts[static_cast<size_t>(i)] * lifts[static_cast<size_t>(k)], 2));
      comm_signs[{i, k}] = s;
      if (s != 1) ok = false;
    }
  std::vector<int> braid_signs;
  for (int i = 0; i + 1 < count; ++i)
    braid_signs.push_back(extract_sign(power(
        lifts[static_cast<size_t>(i)] * lifts[static_cast<size_t>(i + 1)], 3)));

  result.exists = ok;
  result.lift_count = ok ? 2 : 0;

  if (opt.exhaustive && count >= 1) {
    // (eps_i c_i)^2 = c_i^2, (eps_i c_i eps_k c_k)^2 = (c_i c_k)^2, and the
    // braid cube picks up eps_i * eps_{i+1}.
    int valid = 0;
    for (unsigned mask = 0; mask < (1u << count); ++mask) {
      auto sign_at = [&](int i) { return (mask >> i) & 1u ? -1 : 1; };
      bool good = true;
      for (int i = 0; i < count && good; ++i)
        if (squares[static_cast<size_t>(i)] != 1) good = false;
      for (const auto& entry : comm_signs)
        if (entry.second != 1) good = false;
      for (int i = 0; i + 1 < count && good; ++i)
        if (sign_at(i) * sign_at(i + 1) * braid_signs[static_cast<size_t>(i)] != 1)
          good = false;
      if (good) ++valid;
    }
    if (valid != result.lift_count)
      throw std::logic_error("exhaustive sign search disagrees with propagation");
  }
  return result;
}

LiftSearchResult verify_an_lift(const OrthogonalRep& rep, const LiftOptions& opt) {
  require_dim(rep.degree);
  if (rep.kind != GeneratorKind::Alternating)
    throw std::invalid_argument("verify_an_lift: need alternating-group generators");
  if (rep.n < 4) throw std::invalid_argument("verify_an_lift: need n >= 4");
  LiftSearchResult result;
  result.max_residual = validate_an_relations(rep, opt.tolerance);

  int count = static_cast<int>(rep.generators.size());
  std::vector<Multivector> lifts;
  lifts.reserve(static_cast<size_t>(count));
  // The first generator has order 3; its lift comes from the reflection
  // factorization and its sign is pinned by requiring the cube to be +1.
  lifts.push_back(lift_orthogonal(rep.generators[0], opt.tolerance));
  if (extract_sign(power(lifts[0], 3)) != 1) lifts[0] *= -1.0;
  for (int j = 1; j < count; ++j)
    lifts.push_back(candidate_lift(rep.generators[static_cast<size_t>(j)], opt.tolerance));

  bool ok = true;
  std::vector<int> squares(static_cast<size_t>(count), 1);
  for (int j = 1; j < count; ++j) {
    squares[static_cast<size_t>(j)] =
        extract_sign(lifts[static_cast<size_t>(j)] * lifts[static_cast<size_t>(j)]);
    if (squares[static_cast<size_t>(j)] != 1) ok = false;
  }
  std::map<std::pair<int, int>, int> comm_signs;
  for (int i = 0; i < count; ++i)
    for (int j = i + 2; j < count; ++j) {
      int s = extract_sign(power(
          lifts[static_cast<size_t>(i)] * lifts[static_cast<size_t>(j)], 2));
      comm_signs[{i, j}] = s;
      if (s != 1) ok = false;
    }
  std::vector<int> braid_signs;
  for (int j = 1; j < count; ++j)
    braid_signs.push_back(extract_sign(power(
        lifts[static_cast<size_t>(j - 1)] * lifts[static_cast<size_t>(j)], 3)));

  result.exists = ok;
  result.lift_count = ok ? 1 : 0;

  if (opt.exhaustive) {
    int cube0 = extract_sign(power(lifts[0], 3));  // +1 after pinning
    int valid = 0;
    for (unsigned mask = 0; mask < (1u << count); ++mask) {
      auto sign_at = [&](int i) { return (mask >> i) & 1u ? -1 : 1; };
      bool good = sign_at(0) * cube0 == 1;  // (eps c)^3 = eps c^3
      for (int j = 1; j < count && good; ++j)
        if (squares[static_cast<size_t>(j)] != 1) good = false;
      for (const auto& entry : comm_signs)
        if (entry.second != 1) good = false;
      for (int j = 1; j < count && good; ++j)
        if (sign_at(j - 1) * sign_at(j) * braid_signs[static_cast<size_t>(j - 1)] != 1)
          good = false;
      if (good) ++valid;
    }
    if (valid != result.lift_count)
      throw std::logic_error("exhaustive sign search disagrees with propagation");
  }
  return result;
}

bool det_twist_check(const OrthogonalRep& rep, const LiftOptions& opt) {
  if (rep.kind != GeneratorKind::Symmetric)
    throw std::invalid_argument("det_twist_check: need symmetric-group generators");
  require_dim(rep.degree + 1);

  OrthogonalRep twisted;
  twisted.n = rep.n;
  twisted.degree = rep.degree + 1;
  twisted.kind = GeneratorKind::Symmetric;
  for (const auto& m : rep.generators) {
    Matrix det_block(1, 1);
    det_block.at(0, 0) = determinant(m) > 0 ? 1.0 : -1.0;
    twisted.generators.push_back(block_diag(m, det_block));
  }

  LiftSearchResult base = verify_sn_lift(rep, opt);
  LiftSearchResult ext = verify_sn_lift(twisted, opt);
  return base.exists == ext.exists;
}

}  // namespace spinlift
