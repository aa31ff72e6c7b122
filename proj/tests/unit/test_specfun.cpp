#include <cmath>

#include "doctest.h"
#include "lh/errors.hpp"
#include "lh/specfun.hpp"

using namespace lh;

TEST_SUITE("specfun") {
  TEST_CASE("factorials are exact in the double range") {
    CHECK(factorial(0) == 1.0);
    CHECK(factorial(10) == 3628800.0);
    CHECK(gamma_int(21) == 2432902008176640000.0);
    CHECK_THROWS_AS(gamma_int(0), DomainError);
  }

  TEST_CASE("compensated sum keeps small terms") {
    const std::vector<cplx> t{1e16, 1.0, -1e16, 1.0};
    CHECK(compensated_sum(t).real() == 2.0);
  }

  TEST_CASE("terminating 2F1") {
    // 2F1(-2, b; c; z) = 1 - 2bz/c + b(b+1)z^2/(c(c+1))
    const double b = 1.5, c = 2.5;
    const cplx z(0.3, -0.2);
    const cplx want = 1.0 - 2.0 * b * z / c + b * (b + 1) * z * z / (c * (c + 1));
    CHECK(std::abs(hyp2f1_terminating(-2, b, c, z) - want) < 1e-15);
    CHECK_THROWS_AS(hyp2f1_terminating(0.5, 1.5, 2.0, 0.1), UnsupportedError);
    CHECK_THROWS_AS(hyp2f1_terminating(-3, 1.0, -1.0, 0.1), DomainError);
  }

  TEST_CASE("3F2 at unit argument") {
    // Saalschutz: 3F2(-n, a, b; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)
    const int n = 3;
    const double a = 0.5, b = 1.25, c = 2.0;
    auto poch = [](double x, int k) {
      double p = 1.0;
      for (int i = 0; i < k; ++i) p *= x + i;
      return p;
    };
    const double want = poch(c - a, n) * poch(c - b, n) / (poch(c, n) * poch(c - a - b, n));
    CHECK(hyp3f2_unit(-n, a, b, c, 1 + a + b - c - n) == doctest::Approx(want).epsilon(1e-14));
    CHECK(hyp3f2_unit_regularized(-n, a, b, c, 3.0) ==
          doctest::Approx(hyp3f2_unit(-n, a, b, c, 3.0) / 2.0).epsilon(1e-14));
  }

  TEST_CASE("spherical and Jacobi factors reduce to cos, cosh") {
    const HalfInt l(1);
    CHECK(std::abs(spherical_p(l, 0, 0, 0.8) - std::cos(0.8)) < 1e-15);
    CHECK(jacobi_p(l, 0, 0, 0.6) == doctest::Approx(std::cosh(0.6)).epsilon(1e-15));
  }

  TEST_CASE("jets differentiate termwise") {
    const double h = 1e-5;
    for (int tl = 1; tl <= 4; ++tl) {
      const HalfInt l = HalfInt::from_twice(tl);
      for (HalfInt m : projections(l))
        for (HalfInt n : projections(l)) {
          const auto sj = spherical_p_jet(l, m, n, 1.1);
          const cplx fd = (spherical_p(l, m, n, 1.1 + h) - spherical_p(l, m, n, 1.1 - h)) / (2 * h);
          CHECK(std::abs(sj.derivative - fd) < 1e-8);
          const auto jj = jacobi_p_jet(l, m, n, -0.7);
          const double fj = (jacobi_p(l, m, n, -0.7 + h) - jacobi_p(l, m, n, -0.7 - h)) / (2 * h);
          CHECK(jj.derivative == doctest::Approx(fj).epsilon(1e-7));
        }
    }
  }

  TEST_CASE("hypergeometric forms with derived parameters match the sums") {
    for (int tl = 0; tl <= 6; ++tl) {
      const HalfInt l = HalfInt::from_twice(tl);
      for (HalfInt m : projections(l))
        for (HalfInt n : projections(l)) {
          CHECK(std::abs(spherical_p_hyp(l, m, n, 0.9) - spherical_p(l, m, n, 0.9)) < 1e-13);
          CHECK(jacobi_p_hyp(l, m, n, 0.8) == doctest::Approx(jacobi_p(l, m, n, 0.8)).epsilon(1e-13));
        }
    }
  }

  TEST_CASE("printed hypergeometric parameters disagree") {
    const HalfInt l(1);
    // l = 1, m = n = 0: off by O(1)
    CHECK(std::abs(spherical_p_hyp(l, 0, 0, 0.9, HypParams::Printed) - spherical_p(l, 0, 0, 0.9)) > 0.1);
    CHECK(std::abs(jacobi_p_hyp(l, 0, 0, 0.8, HypParams::Printed) - jacobi_p(l, 0, 0, 0.8)) > 0.1);
    // m - n = 2: no numerator parameter is a nonpositive integer, the series does not terminate
    CHECK_THROWS_AS(spherical_p_hyp(l, 1, -1, 0.9, HypParams::Printed), UnsupportedError);
  }

  TEST_CASE("index errors") {
    CHECK_THROWS_AS(spherical_p(HalfInt(1), lh::kHalf, 0, 0.3), DomainError);
    CHECK_THROWS_AS(jacobi_p(HalfInt(1), 2, 0, 0.3), DomainError);
  }
}
