#include <numbers>

#include "doctest.h"
#include "lh/errors.hpp"
#include "lh/euler.hpp"

using namespace lh;

namespace {
const ComplexEulerAngles kA{0.3, 0.2, 1.1, 0.4, 0.7, -0.3};
const ComplexEulerAngles kB{1.2, -0.5, 0.6, -0.9, 0.2, 0.8};

double signed_distance(const GroupElement& a, const GroupElement& b) {
  return std::min(distance(a, b), distance(a, -b));
}
}  // namespace

TEST_SUITE("euler") {
  TEST_CASE("identity angles give the identity") {
    const GroupElement g = to_matrix({});
    CHECK(distance(g, GroupElement{}) < 1e-15);
  }

  TEST_CASE("unit determinant") {
    CHECK(std::abs(to_matrix(kA).det() - 1.0) < 1e-14);
    CHECK(std::abs(to_matrix(kB).det() - 1.0) < 1e-14);
  }

  TEST_CASE("six-factor product agrees with the closed form") {
    CHECK(distance(to_matrix(kA), to_matrix_factored(kA)) < 1e-14);
    CHECK(distance(to_matrix(kB), to_matrix_factored(kB)) < 1e-14);
  }

  TEST_CASE("from_matrix recovers the element") {
    for (const auto& a : {kA, kB}) {
      const AngleRecovery r = from_matrix(to_matrix(a));
      CHECK(r.unique);
      const GroupElement g = to_matrix(a);
      CHECK(distance(to_matrix(r.angles), r.sign == 1 ? g : -g) < 1e-12);
      CHECK(r.angles.theta >= 0.0);
      CHECK(r.angles.theta <= std::numbers::pi);
    }
  }

  TEST_CASE("from_matrix on the diagonal set fixes psi = 0") {
    const AngleRecovery r = from_matrix(to_matrix({0.4, 0.3, 0.0, 0.0, 0.5, 0.1}));
    CHECK_FALSE(r.unique);
    CHECK(r.angles.psi == 0.0);
    CHECK(signed_distance(to_matrix(r.angles), to_matrix({0.4, 0.3, 0.0, 0.0, 0.5, 0.1})) < 1e-12);
  }

  TEST_CASE("composition matches the matrix product up to sign") {
    const Composition c = compose_detailed(kA, kB);
    CHECK_FALSE(c.fallback);
    CHECK(signed_distance(to_matrix(c.angles), to_matrix(kA) * to_matrix(kB)) < 1e-12);
  }

  TEST_CASE("composition falls back near the degenerate set") {
    const ComplexEulerAngles a{0.3, 0.0, 0.5, 0.0, 0.2, 0.0};
    const ComplexEulerAngles b{-0.2, 0.0, -0.5, 0.0, 0.1, 0.0};
    const Composition c = compose_detailed(a, b);
    CHECK(c.fallback);
    CHECK(signed_distance(to_matrix(c.angles), to_matrix(a) * to_matrix(b)) < 1e-12);
  }

  TEST_CASE("composition with a complex-rotation factor") {
    const cplx p2(0.4, -0.2), t2(0.9, 0.3), s2(0.1, -0.6);
    const GroupElement rhs = to_matrix(kA) * subgroup_matrix(Subgroup::w3, p2) *
                             subgroup_matrix(Subgroup::w2, t2) * subgroup_matrix(Subgroup::w3, s2);
    const auto corrected = compose_omega2(kA, p2, t2, s2, Omega2Form::Corrected);
    CHECK(signed_distance(to_matrix(corrected), rhs) < 1e-12);
    // without the factor i the half-angle product is wrong
    const auto printed = compose_omega2(kA, p2, t2, s2, Omega2Form::Printed);
    CHECK(signed_distance(to_matrix(printed), rhs) > 1e-3);
  }

  TEST_CASE("subgroups") {
    const GroupElement b3 = subgroup_matrix(Subgroup::b3, 0.6);
    CHECK(std::abs(b3.a11 - std::exp(0.3)) < 1e-15);
    CHECK(std::abs(b3.a22 - std::exp(-0.3)) < 1e-15);
    CHECK_THROWS_AS(subgroup_matrix(Subgroup::a1, cplx(0.1, 0.2)), DomainError);
    const GroupElement w1 = subgroup_matrix(Subgroup::w1, cplx(0.7, -0.4));
    CHECK(distance(w1, subgroup_matrix(Subgroup::a1, 0.7) * subgroup_matrix(Subgroup::b1, 0.4)) < 1e-14);
  }
}
