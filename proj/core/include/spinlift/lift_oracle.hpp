#pragma once

#include <string>
#include <vector>

#include "spinlift/clifford.hpp"
#include "spinlift/partition.hpp"

namespace spinlift {

/// Minimal dense real matrix; just enough linear algebra for the oracle.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0.0) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  double at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);

  double frobenius_norm() const;
  double trace() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

/// Block diagonal of two square matrices.
Matrix block_diag(const Matrix& a, const Matrix& b);
/// Determinant by LU with partial pivoting (small matrices only).
double determinant(const Matrix& m);

enum class GeneratorKind { Symmetric, Alternating };

/// Orthogonal matrices for a generating set: adjacent transpositions
/// s_1..s_{n-1} for the symmetric group, or the standard alternating-group
/// generators u_i = s_1 s_{i+1} for i = 1..n-2.
struct OrthogonalRep {
  int n = 0;
  int degree = 0;
  GeneratorKind kind = GeneratorKind::Symmetric;
  std::vector<Matrix> generators;
};

struct LiftOptions {
  double tolerance = 1e-8;   ///< accepted residual for matrix relations
  bool exhaustive = false;   ///< cross-validate with a full sign search
};

struct LiftSearchResult {
  bool exists = false;
  int lift_count = 0;
  double max_residual = 0.0;
};

/// Young's orthogonal form: matrices for the adjacent transpositions acting
/// on the standard-tableau basis with the usual axial-distance coefficients.
OrthogonalRep young_orthogonal_matrices(const Partition& shape);

/// Alternating-group generator matrices u_i = pi(s_1) pi(s_{i+1}) derived
/// from a symmetric-group representation.
OrthogonalRep alternating_generators(const OrthogonalRep& sn_rep);

/// All standard Young tableaux of the shape, each as the row index (0-based)
/// of the entries 1..n, in lexicographic order of that vector.
std::vector<std::vector<int>> standard_tableaux(const Partition& shape);

/// (-1)^{g(g+1)/2}: the square of a product of g orthonormal anticommuting
/// vectors, hence the square of a candidate lift of an involution with g
/// eigenvalues -1.
int square_sign(long long g);

/// Lift of an orthogonal involution: the Clifford product of an orthonormal
/// basis of the -1 eigenspace (extracted from the projector (I - M)/2 by
/// modified Gram-Schmidt with a re-orthogonalization pass; rank threshold
/// 1e-6).  The twisted conjugation by the result reproduces M; this is
/// verified internally and a violation throws.
Multivector candidate_lift(const Matrix& m, double tolerance = 1e-8);

/// Lift of an arbitrary orthogonal matrix as a product of reflections
/// (Householder factorization).  Used for non-involution generators.
Multivector lift_orthogonal(const Matrix& m, double tolerance = 1e-8);

/// Twisted conjugation v -> grade_involution(c) v c^{-1} as a matrix.
Matrix rho_matrix(const Multivector& c);

/// Decides whether the symmetric-group representation lifts through the
/// double cover of the orthogonal group, by explicit construction: candidate
/// lifts c_i, sign propagation along the braid relations, then the
/// square and commutation conditions (both sign independent).  Returns the
/// number of valid sign assignments: 2 when the lift exists (the free sign
/// of c_1), otherwise 0.  With exhaustive set, additionally enumerates all
/// 2^{n-1} assignments and cross-checks the count.
LiftSearchResult verify_sn_lift(const OrthogonalRep& rep, const LiftOptions& opt = {});

/// Same search for an alternating-group generator system.  The sign of the
/// lift of the order-3 generator is pinned by requiring its cube to be +1,
/// so a successful search yields a unique lift.
LiftSearchResult verify_an_lift(const OrthogonalRep& rep, const LiftOptions& opt = {});

/// Builds pi + det pi as block matrices and checks that the lift searches
/// for both representations agree.  Always true; exercised as an oracle for
/// the determinant-twist lemma.
bool det_twist_check(const OrthogonalRep& rep, const LiftOptions& opt = {});

}  // namespace spinlift
