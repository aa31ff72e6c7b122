#include <cmath>

#include "doctest.h"
#include "lh/errors.hpp"
#include "lh/hyper.hpp"
#include "lh/liealg.hpp"

using namespace lh;

namespace {
const ComplexEulerAngles kP{0.6, 0.4, 1.2, 0.5, 0.9, 0.3};
}

TEST_SUITE("liealg") {
  TEST_CASE("A3 and B3 are plain partials") {
    const int n = 2;
    FdOptions o;
    o.h = 1e-4;
    const ParamFunction f = [](const ComplexEulerAngles& a) { return std::exp(cplx(0, -2) * a.psi); };
    CHECK(std::abs(apply(OperatorId::A3, f, kP, o) - cplx(0, -n) * f(kP)) < 1e-6);
    const ParamFunction g = [](const ComplexEulerAngles& a) { return std::exp(-2.0 * a.veps); };
    CHECK(std::abs(apply(OperatorId::B3, g, kP, o) + 2.0 * g(kP)) < 1e-6);
  }

  TEST_CASE("step and pole checks") {
    const ParamFunction f = m_family(1, 0, 0);
    FdOptions o;
    o.h = 1e-2;
    CHECK_THROWS_AS(apply(OperatorId::A1, f, kP, o), DomainError);
    ComplexEulerAngles near_pole = kP;
    near_pole.theta = 1e-4;
    near_pole.tau = 0.0;
    CHECK_THROWS_AS(apply(OperatorId::A1, f, near_pole), PoleError);
  }

  TEST_CASE("rotation and boost commutators") {
    const ParamFunction f = m_family(1, 0, 0);
    for (const auto& r : rotation_boost_relations())
      CHECK_MESSAGE(commutator_residual(r.a, r.b, r.expected, f, kP) < 1e-4, r.name);
  }

  TEST_CASE("ladder algebra, including [X3,X1]=X2") {
    const ParamFunction f = m_family(1, 1, -1);
    REQUIRE(ladder_algebra_relations().size() == 15);
    for (const auto& r : ladder_algebra_relations())
      CHECK_MESSAGE(commutator_residual(r.a, r.b, r.expected, f, kP) < 1e-4, r.name);
    // the line as typeset, [X2,X1]=X2, does not hold
    const ExpectedOperator typo{1, OperatorId::X2};
    CHECK(commutator_residual(OperatorId::X2, OperatorId::X1, typo, f, kP) > 1e-2);
  }

  TEST_CASE("ladders on M") {
    FdOptions o;
    o.h = 1e-4;
    for (int tl = 0; tl <= 2; ++tl) {
      const HalfInt l = HalfInt::from_twice(tl);
      for (HalfInt m : projections(l))
        for (HalfInt n : projections(l))
          for (OperatorId op : {OperatorId::Xplus, OperatorId::Xminus, OperatorId::X3, OperatorId::Yplus,
                                OperatorId::Yminus, OperatorId::Y3})
            CHECK(ladder_residual(l, m, n, op, kP, o) < 1e-6);
    }
  }

  TEST_CASE("Y3 does not act as multiplication by m") {
    FdOptions o;
    o.h = 1e-4;
    const HalfInt l(1);
    const cplx y3 = apply(OperatorId::Y3, m_family(l, 1, 0), kP, o);
    CHECK(std::abs(y3 - m_function(l, 1, 0, kP)) > 1e-2);
  }

  TEST_CASE("written-out ladder operators equal the combinations") {
    for (OperatorId op : {OperatorId::Xplus, OperatorId::Xminus, OperatorId::Yplus, OperatorId::Yminus}) {
      const auto a = operator_coefficients(op, kP), b = explicit_ladder_coefficients(op, kP);
      for (int k = 0; k < 6; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-14);
    }
  }

  TEST_CASE("every single sign flip breaks a ladder relation") {
    FdOptions o;
    o.h = 1e-4;
    for (int flip = 0; flip < CombinationSigns::kFlipCount; ++flip) {
      o.signs = CombinationSigns::with_flip(flip);
      double worst = 0.0;
      // M_00 does not see the third components, so scan all of l = 1
      for (HalfInt m : projections(1))
        for (HalfInt n : projections(1))
          for (OperatorId op : {OperatorId::Xplus, OperatorId::Xminus, OperatorId::X3, OperatorId::Yplus,
                                OperatorId::Yminus, OperatorId::Y3})
            worst = std::max(worst, ladder_residual(1, m, n, op, kP, o));
      CHECK_MESSAGE(worst > 1e-3, CombinationSigns::flip_name(flip));
    }
  }

  TEST_CASE("recurrences, corrected forms") {
    for (int tl = 0; tl <= 4; ++tl) {
      const HalfInt l = HalfInt::from_twice(tl);
      for (HalfInt m : projections(l))
        for (HalfInt n : projections(l))
          for (int i = 0; i < kRecurrenceCount; ++i)
            CHECK(recurrence_residual(static_cast<RecurrenceId>(i), l, m, n, 0.9, -0.7) < 1e-12);
    }
  }

  TEST_CASE("three-term relation at l = 1/2, m = n = 1/2") {
    CHECK(recurrence_residual(RecurrenceId::ThreeTermN, kHalf, kHalf, kHalf, 1.3, 0.4) < 1e-14);
  }

  TEST_CASE("printed forms of the recurrences fail") {
    for (int i = 0; i < kRecurrenceCount; ++i)
      CHECK(recurrence_residual(static_cast<RecurrenceId>(i), 1, 0, 1, 0.9, -0.7, RecurrenceForm::Printed) > 1e-3);
  }

  TEST_CASE("recurrence pole") {
    CHECK_THROWS_AS(recurrence_residual(RecurrenceId::LowerN, 1, 0, 0, 1e-5, 0.0), PoleError);
  }
}
