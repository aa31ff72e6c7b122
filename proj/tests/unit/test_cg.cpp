#include "doctest.h"
#include "lh/cg.hpp"

using namespace lh;

namespace {
// exact values from an independent symbolic implementation
struct Frozen {
  CGIndex idx;
  const char* exact;
};
const HalfInt h = kHalf, h3 = HalfInt::from_twice(3), h5 = HalfInt::from_twice(5);
const Frozen kFrozen[] = {
    {{h, h, 1, h, -h, 0}, "sqrt(1/2)"},
    {{1, h3, h3, 0, h, h}, "-sqrt(1/15)"},
    {{2, 1, 2, -1, 1, 0}, "-sqrt(1/2)"},
    {{h3, h3, 2, h, -h, 0}, "sqrt(1/4)"},
    {{3, 2, 3, -2, 1, -1}, "sqrt(1/4)"},
    {{h5, h3, 1, -h, h3, 1}, "-sqrt(1/20)"},
    {{3, 3, 0, 1, -1, 0}, "sqrt(1/7)"},
};
}  // namespace

TEST_SUITE("cg") {
  TEST_CASE("trivial couplings") {
    for (int tl = 0; tl <= 6; ++tl) {
      const HalfInt l = HalfInt::from_twice(tl);
      for (HalfInt m : projections(l)) CHECK(clebsch_gordan({l, 0, l, m, 0, m}) == doctest::Approx(1.0));
    }
    CHECK(clebsch_gordan({h, h, 1, h, h, 1}) == doctest::Approx(1.0));
    CHECK(clebsch_gordan_exact({h, h, 1, h, h, 1}).str() == "1");
  }

  TEST_CASE("frozen exact values") {
    for (const auto& f : kFrozen) {
      CHECK(clebsch_gordan_exact(f.idx).str() == f.exact);
      CHECK(clebsch_gordan(f.idx) == doctest::Approx(clebsch_gordan_exact(f.idx).value()).epsilon(1e-14));
    }
  }

  TEST_CASE("selection rules give zero") {
    CHECK(clebsch_gordan({1, 1, 1, 1, 0, 0}) == 0.0);     // m != j + k
    CHECK(clebsch_gordan({1, 1, 3, 1, 1, 2}) == 0.0);     // triangle
    CHECK(clebsch_gordan({1, h, 1, 0, h, h}) == 0.0);     // parity of l1 + l2 + l
    CHECK(clebsch_gordan_exact({1, 1, 1, 0, 0, 0}).sign == 0);  // genuine zero
  }

  TEST_CASE("orthogonality") {
    for (int a = 0; a <= 6; ++a)
      for (int b = 0; b <= 6; ++b)
        CHECK(cg_orthogonality_residual(HalfInt::from_twice(a), HalfInt::from_twice(b)) < 1e-12);
  }

  TEST_CASE("SL(2,C) coefficient is the product of two SU(2) factors") {
    const CGIndex u{1, h, h3, 0, h, h}, d{h, h, 1, -h, h, 0};
    CHECK(cg_sl2c(u, d) == doctest::Approx(clebsch_gordan(u) * clebsch_gordan(d)));
  }

  TEST_CASE("squared tables match the rational formulas on admissible entries") {
    for (int tl = 2; tl <= 10; ++tl) {
      const HalfInt l = HalfInt::from_twice(tl);
      for (HalfInt m : projections(l + 1)) {
        const auto p = printed_bbar_l1(l, m), c = cg_squared_l1(l, m);
        for (int r = 0; r < 3; ++r)
          for (int k = 0; k < 3; ++k)
            if (bbar_admissible(false, l, m, r, k)) CHECK(p[r][k] == c[r][k]);
      }
      for (HalfInt m : projections(l + kHalf)) {
        const auto p = printed_bbar_half(l, m), c = cg_squared_half(l, m);
        for (int r = 0; r < 2; ++r)
          for (int k = 0; k < 2; ++k)
            if (bbar_admissible(true, l, m, r, k)) CHECK(p[r][k] == c[r][k]);
      }
    }
    // first row, first column: (l-m)(l-m+1)/((2l+1)(2l+2))
    CHECK(cg_squared_l1(2, 0)[0][0] == Rational(6, 30));
  }

  TEST_CASE("coupling relations") {
    const ComplexEulerAngles a{0.3, 0.2, 1.1, 0.4, 0.7, -0.3};
    int evaluated = 0;
    for (int tl = 2; tl <= 4; ++tl) {
      const HalfInt l = HalfInt::from_twice(tl);
      for (HalfInt j : projections(l + 1))
        for (HalfInt m : projections(l + 1))
          for (int row = 1; row <= 9; ++row) {
            const auto c = coupling_recurrence_residual(CouplingKind::NineL1, row, l, j, m, a);
            if (c.skipped) continue;
            ++evaluated;
            CHECK(c.residual < 1e-12);
          }
      for (HalfInt j : projections(l + kHalf))
        for (HalfInt m : projections(l + kHalf))
          for (int row = 1; row <= 4; ++row) {
            const auto c = coupling_recurrence_residual(CouplingKind::FourHalf, row, l, j, m, a);
            if (!c.skipped) CHECK(c.residual < 1e-12);
          }
    }
    CHECK(evaluated > 100);
  }

  TEST_CASE("coupling relations as printed fail") {
    const ComplexEulerAngles a{0.3, 0.2, 1.1, 0.4, 0.7, -0.3};
    const auto c = coupling_recurrence_residual(CouplingKind::NineL1, 5, 2, 0, 0, a, CouplingForm::Printed);
    CHECK(c.residual > 1e-3);
  }

  TEST_CASE("skipped when the shifted index leaves the range") {
    const ComplexEulerAngles a{0.3, 0.2, 1.1, 0.4, 0.7, -0.3};
    // row 1 shifts j to j + 1
    CHECK(coupling_recurrence_residual(CouplingKind::NineL1, 1, 1, 1, 0, a).skipped);
  }
}
