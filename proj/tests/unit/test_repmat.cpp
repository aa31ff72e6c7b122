#include "doctest.h"
#include "lh/oracle.hpp"
#include "lh/repmat.hpp"

using namespace lh;

TEST_SUITE("repmat") {
  const ComplexEulerAngles a1{0.3, 0.2, 1.1, 0.4, 0.7, -0.3};
  const ComplexEulerAngles a2{1.2, -0.5, 0.6, -0.9, 0.2, 0.8};

  TEST_CASE("l = 1/2 matrix is the group element") {
    const RepMatrix t = rep_matrix(kHalf, a1);
    CHECK(relative_deviation(t.entries, to_matrix(a1).as_matrix()) < 1e-15);
  }

  TEST_CASE("homomorphism up to the double-cover sign") {
    for (int tl = 0; tl <= 6; ++tl) CHECK(homomorphism_residual(HalfInt::from_twice(tl), a1, a2) < 1e-12);
  }

  TEST_CASE("rotations give unitary matrices") {
    for (int tl = 0; tl <= 6; ++tl) {
      const HalfInt l = HalfInt::from_twice(tl);
      CHECK(unitarity_defect(rep_matrix(l, {0.4, 0.0, 1.3, 0.0, 2.2, 0.0})) < 1e-13);
      CHECK(relative_deviation(rep_matrix(l, {0.4, 0.0, 1.3, 0.0, 2.2, 0.0}).entries,
                               su2_matrix(l, 0.4, 1.3, 2.2).entries) < 1e-14);
    }
  }

  TEST_CASE("boosts are not unitary") {
    CHECK(unitarity_defect(rep_matrix(1, a1)) > 1e-2);
  }

  TEST_CASE("evaluation methods agree on the whole matrix") {
    for (int tl = 0; tl <= 6; ++tl) {
      const HalfInt l = HalfInt::from_twice(tl);
      const RepMatrix d = rep_matrix(l, a2);
      CHECK(relative_deviation(rep_matrix(l, a2, ZEvalMethod::Factorized).entries, d.entries) < 1e-13);
      CHECK(relative_deviation(rep_matrix(l, a2, ZEvalMethod::HypergeometricProduct).entries, d.entries) < 1e-13);
    }
  }

  TEST_CASE("determinant of the weight-1 matrix is one") {
    CHECK(std::abs(rep_matrix(1, a1).entries.determinant() - 1.0) < 1e-13);
  }
}
