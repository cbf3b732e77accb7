#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "spinlift/characters.hpp"
#include "spinlift/clifford.hpp"
#include "spinlift/lift_oracle.hpp"
#include "spinlift/rep.hpp"
#include "spinlift/spinoriality.hpp"
#include "testutil.hpp"

using namespace spinlift;

namespace {

Multivector random_element(int dim, std::mt19937& rng) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  Multivector m(dim);
  for (uint32_t blade = 0; blade < (1u << dim); ++blade) m.set_coeff(blade, coef(rng));
  return m;
}

bool near(const Multivector& a, const Multivector& b, double tol) {
  Multivector d = a - b;
  return std::abs(d.scalar_part()) < tol && d.max_abs_nonscalar() < tol;
}

}  // namespace

TEST_CASE("generator products follow the negative-square convention") {
  Multivector e1 = Multivector::basis_vector(3, 0);
  Multivector e2 = Multivector::basis_vector(3, 1);

  Multivector sq = e1 * e1;
  CHECK(sq.scalar_part() == doctest::Approx(-1.0));
  CHECK(sq.max_abs_nonscalar() == doctest::Approx(0.0));

  Multivector e12 = e1 * e2;
  CHECK(e12.coeff(0b011) == doctest::Approx(1.0));
  Multivector e21 = e2 * e1;
  CHECK(e21.coeff(0b011) == doctest::Approx(-1.0));

  Multivector bivector_sq = e12 * e12;
  CHECK(bivector_sq.scalar_part() == doctest::Approx(-1.0));
  CHECK(bivector_sq.max_abs_nonscalar() == doctest::Approx(0.0));
}

TEST_CASE("geometric product is associative and bilinear on random triples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Multivector a = random_element(5, rng);
    Multivector b = random_element(5, rng);
    Multivector c = random_element(5, rng);
    CHECK(near((a * b) * c, a * (b * c), 1e-9));
    CHECK(near((a + b) * c, a * c + b * c, 1e-9));
    CHECK(near(a * (b + c), a * b + a * c, 1e-9));
  }
}

TEST_CASE("involutions and the spinor norm") {
  std::vector<double> coords{0.6, 0.0, 0.8};
  Multivector v = Multivector::from_vector(coords);
  CHECK(near(v.grade_involution(), v * -1.0, 1e-12));
  CHECK(near(Multivector::scalar(3, 2.5).reversal(), Multivector::scalar(3, 2.5), 1e-12));

  // Unit vectors have spinor norm 1, and conjugation composes the two maps.
  Multivector norm = v.spinor_norm();
  CHECK(norm.scalar_part() == doctest::Approx(1.0));
  CHECK(norm.max_abs_nonscalar() == doctest::Approx(0.0));
  std::mt19937 rng(11);
  Multivector x = random_element(4, rng);
  CHECK(near(x.conjugation(), x.grade_involution().reversal(), 1e-12));
  CHECK(near(x.conjugation(), x.reversal().grade_involution(), 1e-12));
}

TEST_CASE("square sign formula") {
  CHECK(square_sign(0) == 1);
  CHECK(square_sign(1) == -1);
  CHECK(square_sign(2) == -1);
  CHECK(square_sign(3) == 1);
  CHECK(square_sign(4) == 1);
  CHECK(square_sign(12) == 1);
}

TEST_CASE("candidate lifts of simple involutions") {
  Matrix identity = Matrix::identity(4);
  Multivector lift = candidate_lift(identity);
  CHECK(lift.scalar_part() == doctest::Approx(1.0));
  CHECK(lift.max_abs_nonscalar() == doctest::Approx(0.0));

  Matrix reflection = Matrix::identity(4);
  reflection.at(0, 0) = -1.0;
  Multivector r = candidate_lift(reflection);
  CHECK(std::abs(r.coeff(0b0001)) == doctest::Approx(1.0));

  Matrix rotation(2, 2);  // 90-degree rotation is not an involution
  rotation.at(0, 1) = -1.0;
  rotation.at(1, 0) = 1.0;
  CHECK_THROWS_AS(candidate_lift(rotation), std::invalid_argument);
}

TEST_CASE("candidate lifts reproduce random involutions") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 100; ++trial) {
    int dim = 2 + static_cast<int>(rng() % 9);  // up to 10
    int neg = static_cast<int>(rng() % (dim + 1));
    Matrix m = testutil::random_involution(dim, neg, rng);
    Multivector c = candidate_lift(m, 1e-8);

    CHECK((rho_matrix(c) - m).frobenius_norm() < 1e-9);

    Multivector square = c * c;
    CHECK(square.scalar_part() == doctest::Approx(square_sign(neg)).epsilon(1e-9));
    CHECK(square.max_abs_nonscalar() < 1e-9);

    Multivector norm = c.spinor_norm();
    CHECK(norm.scalar_part() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(norm.max_abs_nonscalar() < 1e-9);
  }
}

TEST_CASE("reflection factorization lifts arbitrary orthogonal matrices") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 25; ++trial) {
    int dim = 2 + static_cast<int>(rng() % 7);
    // Product of two random involutions is a generic orthogonal matrix.
    Matrix m = testutil::random_involution(dim, static_cast<int>(rng() % (dim + 1)), rng) *
               testutil::random_involution(dim, static_cast<int>(rng() % (dim + 1)), rng);
    Multivector c = lift_orthogonal(m, 1e-8);
    CHECK((rho_matrix(c) - m).frobenius_norm() < 1e-8);
  }
}

TEST_CASE("dimension cap is enforced") {
  CHECK_THROWS_AS(Multivector(15), std::invalid_argument);
  OrthogonalRep rep = young_orthogonal_matrices(Partition{3, 2, 1});  // degree 16
  CHECK_THROWS_AS(verify_sn_lift(rep), std::invalid_argument);
}

TEST_CASE("orthogonal form matrices satisfy the defining relations") {
  for (int n = 2; n <= 6; ++n) {
    for (const Partition& shape : enumerate_partitions(n)) {
      OrthogonalRep rep = young_orthogonal_matrices(shape);
      CHECK(rep.degree == static_cast<int>(shape.dimension()));
      for (const auto& m : rep.generators) {
        CHECK((m * m.transpose() - Matrix::identity(rep.degree)).frobenius_norm() <
              1e-12);
        CHECK((m * m - Matrix::identity(rep.degree)).frobenius_norm() < 1e-12);
      }
      for (size_t i = 0; i + 1 < rep.generators.size(); ++i) {
        Matrix braid = rep.generators[i] * rep.generators[i + 1];
        CHECK((braid * braid * braid - Matrix::identity(rep.degree)).frobenius_norm() <
              1e-12);
      }
    }
  }
}

TEST_CASE("one-dimensional orthogonal forms") {
  OrthogonalRep triv = young_orthogonal_matrices(Partition{5});
  for (const auto& m : triv.generators) CHECK(m.at(0, 0) == doctest::Approx(1.0));
  OrthogonalRep sgn = young_orthogonal_matrices(Partition{1, 1, 1, 1, 1});
  for (const auto& m : sgn.generators) CHECK(m.at(0, 0) == doctest::Approx(-1.0));
  OrthogonalRep two = young_orthogonal_matrices(Partition{2, 1});
  CHECK(two.generators[0].trace() == doctest::Approx(0.0));
}

TEST_CASE("orthogonal form traces match the exact character values") {
  for (int n = 4; n <= 6; ++n) {
    for (const Partition& shape : enumerate_partitions(n)) {
      OrthogonalRep rep = young_orthogonal_matrices(shape);
      CharTriple t = specht_triple(shape);
      CHECK(BigInt(std::llround(rep.generators[0].trace())) == t.at_s1);
      Matrix s1s3 = rep.generators[0] * rep.generators[2];
      CHECK(BigInt(std::llround(s1s3.trace())) == t.at_s1s3);
    }
  }
}

TEST_CASE("symmetric lift search fixtures") {
  LiftOptions exhaustive;
  exhaustive.exhaustive = true;

  LiftSearchResult r31 =
      verify_sn_lift(young_orthogonal_matrices(Partition{3, 1}), exhaustive);
  CHECK_FALSE(r31.exists);
  CHECK(r31.lift_count == 0);

  LiftSearchResult triv =
      verify_sn_lift(young_orthogonal_matrices(Partition{4}), exhaustive);
  CHECK(triv.exists);
  CHECK(triv.lift_count == 2);

  LiftSearchResult r211 =
      verify_sn_lift(young_orthogonal_matrices(Partition{2, 1, 1}), exhaustive);
  CHECK_FALSE(r211.exists);
  CHECK(r211.lift_count == 0);

  LiftSearchResult r42 =
      verify_sn_lift(young_orthogonal_matrices(Partition{4, 2}), exhaustive);
  CHECK(r42.exists);
  CHECK(r42.lift_count == 2);
}

TEST_CASE("alternating lift search fixtures") {
  LiftOptions exhaustive;
  exhaustive.exhaustive = true;

  // Restriction of the standard permutation representation: h = 2.
  OrthogonalRep perm4 = testutil::permutation_rep(4);
  LiftSearchResult std4 = verify_an_lift(alternating_generators(perm4), exhaustive);
  CHECK_FALSE(std4.exists);
  CHECK(std4.lift_count == 0);

  LiftSearchResult triv = verify_an_lift(
      alternating_generators(young_orthogonal_matrices(Partition{4})), exhaustive);
  CHECK(triv.exists);
  CHECK(triv.lift_count == 1);

  LiftSearchResult r22 = verify_an_lift(
      alternating_generators(young_orthogonal_matrices(Partition{2, 2})), exhaustive);
  CHECK(r22.exists);
  CHECK(r22.lift_count == 1);
}

TEST_CASE("lift search matches the congruence classifier (n = 4)") {
  LiftOptions exhaustive;
  exhaustive.exhaustive = true;
  for (const Partition& shape : enumerate_partitions(4)) {
    bool expected_sn = classify_sn(RepDescriptor::specht(shape)).spinorial;
    OrthogonalRep rep = young_orthogonal_matrices(shape);
    LiftSearchResult sn = verify_sn_lift(rep, exhaustive);
    CHECK(sn.exists == expected_sn);

    bool expected_an =
        classify_an_restriction(RepDescriptor::specht(shape)).spinorial;
    LiftSearchResult an = verify_an_lift(alternating_generators(rep), exhaustive);
    CHECK(an.exists == expected_an);
  }
}

TEST_CASE("determinant twist leaves the verdict unchanged") {
  CHECK(det_twist_check(young_orthogonal_matrices(Partition{3, 1})));
  CHECK(det_twist_check(young_orthogonal_matrices(Partition{4})));
  CHECK(det_twist_check(young_orthogonal_matrices(Partition{3, 1, 1})));
}
