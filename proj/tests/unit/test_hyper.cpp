#include <cmath>

#include "doctest.h"
#include "lh/errors.hpp"
#include "lh/hyper.hpp"

using namespace lh;

namespace {
// Independent high-precision evaluation of the polynomial model (40 digits, rounded).
struct Frozen {
  int tl, tm, tn;
  double theta, tau, re, im;
};
const Frozen kFrozen[] = {
    {1, 1, 1, 0.7, 0.3, 0.94996048562721593, 0.051627768241311156},
    {1, -1, 1, 0.7, 0.3, 0.14143489884343151, 0.34676264621688177},
    {2, 0, 0, 1.0, 0.5, 0.60925890915779423, 0.43848657989259528},
    {2, 2, -2, 1.3, -0.8, -0.32111885925093308, -0.42787089432742999},
    {3, 1, -3, 0.9, 1.2, -0.16752885370324783, 1.1231595223510319},
    {4, 2, 0, 2.1, 0.4, -0.26662914360901246, -0.71382778789722396},
    {6, -2, 4, 0.45, -1.7, -1.4119679539671777, 18.958156614134479},
    {5, 5, -1, 2.6, 0.9, 1.1143865468200563, 0.063628463844643444},
};
}  // namespace

TEST_SUITE("hyper") {
  TEST_CASE("frozen values") {
    for (const auto& f : kFrozen) {
      const HalfInt l = HalfInt::from_twice(f.tl), m = HalfInt::from_twice(f.tm),
                    n = HalfInt::from_twice(f.tn);
      const cplx want(f.re, f.im);
      for (auto method : {ZEvalMethod::DoubleSum, ZEvalMethod::Factorized,
                          ZEvalMethod::HypergeometricProduct}) {
        const cplx z = z_function(l, m, n, f.theta, f.tau, method);
        CHECK(std::abs(z - want) / (1.0 + std::abs(want)) < 1e-13);
      }
    }
  }

  TEST_CASE("weight zero is constant") {
    CHECK(z_function(0, 0, 0, 1.3, -0.7) == cplx(1.0));
  }

  TEST_CASE("l = 1 central entry is cos theta^c") {
    const cplx z = z_function(1, 0, 0, 1.0, 0.5);
    CHECK(std::abs(z - std::cos(cplx(1.0, -0.5))) < 1e-15);
  }

  TEST_CASE("closed forms for l = 1/2 and l = 1") {
    for (int tl : {1, 2}) {
      const HalfInt l = HalfInt::from_twice(tl);
      const RepMatrix t = explicit_t_matrix(l, 0.8, -0.6);
      for (HalfInt m : projections(l))
        for (HalfInt n : projections(l)) CHECK(std::abs(t.at(m, n) - z_function(l, m, n, 0.8, -0.6)) < 1e-14);
    }
    CHECK_THROWS_AS(explicit_t_matrix(HalfInt::from_twice(3), 0.1, 0.1), UnsupportedError);
  }

  TEST_CASE("dotted family is Z at -tau") {
    const HalfInt l = HalfInt::from_twice(3);
    CHECK(dotted_z_function(l, kHalf, -kHalf, 0.9, 0.4) == z_function(l, kHalf, -kHalf, 0.9, -0.4));
    const ZJet d = dotted_z_jet(l, kHalf, -kHalf, 0.9, 0.4), z = z_jet(l, kHalf, -kHalf, 0.9, -0.4);
    CHECK(d.value == z.value);
    CHECK(d.d_theta == z.d_theta);
    CHECK(d.d_tau == -z.d_tau);
  }

  TEST_CASE("jet derivatives against central differences") {
    const double h = 1e-5;
    const HalfInt l = HalfInt::from_twice(4);
    for (HalfInt m : projections(l))
      for (HalfInt n : projections(l)) {
        const ZJet j = z_jet(l, m, n, 1.2, 0.3);
        const cplx ft = (z_function(l, m, n, 1.2 + h, 0.3) - z_function(l, m, n, 1.2 - h, 0.3)) / (2 * h);
        const cplx fu = (z_function(l, m, n, 1.2, 0.3 + h) - z_function(l, m, n, 1.2, 0.3 - h)) / (2 * h);
        CHECK(std::abs(j.d_theta - ft) < 1e-8);
        CHECK(std::abs(j.d_tau - fu) < 1e-8);
        // Z is holomorphic in theta - i tau
        CHECK(std::abs(j.d_tau + cplx(0, 1) * j.d_theta) < 1e-12);
      }
  }

  TEST_CASE("generalized function carries the exponential factors") {
    const ComplexEulerAngles a{0.3, 0.2, 1.1, 0.4, 0.7, -0.3};
    const HalfInt l(1);
    const cplx want = std::exp(-1.0 * cplx(a.eps, a.phi)) * z_function(l, 1, -1, a.theta, a.tau) *
                      std::exp(cplx(a.veps, a.psi));
    CHECK(std::abs(m_function(l, 1, -1, a) - want) < 1e-14);
  }

  TEST_CASE("addition theorem") {
    const ComplexEulerAngles a1{0.3, 0.2, 1.1, 0.4, 0.7, -0.3}, a2{1.2, -0.5, 0.6, -0.9, 0.2, 0.8};
    for (int tl = 1; tl <= 4; ++tl) {
      const HalfInt l = HalfInt::from_twice(tl);
      double worst_printed = 0.0;
      for (HalfInt m : projections(l))
        for (HalfInt n : projections(l)) {
          CHECK(addition_theorem_residual(l, m, n, a1, a2, AdditionForm::Special) < 1e-12);
          CHECK(addition_theorem_residual(l, m, n, a1, a2, AdditionForm::General) < 1e-12);
          worst_printed = std::max(worst_printed,
                                   addition_theorem_residual(l, m, n, a1, a2, AdditionForm::GeneralPrinted));
        }
      CHECK(worst_printed > 1e-3);
    }
  }

  TEST_CASE("index errors") {
    CHECK_THROWS_AS(z_function(1, 2, 0, 0.1, 0.1), DomainError);
    CHECK_THROWS_AS(z_function(1, kHalf, kHalf, 0.1, 0.1), DomainError);
  }
}
