#include "doctest.h"
#include "lh/oracle.hpp"
#include "lh/repmat.hpp"

using namespace lh;

TEST_SUITE("oracle") {
  const ComplexEulerAngles a1{0.3, 0.2, 1.1, 0.4, 0.7, -0.3};
  const ComplexEulerAngles a2{1.2, -0.5, 0.6, -0.9, 0.2, 0.8};

  TEST_CASE("binomials") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(62, 31) == 465428353255261088ULL);
    CHECK(binomial(5, 7) == 0);
  }

  TEST_CASE("act on a linear form") {
    const GroupElement g = to_matrix(a1);
    // z0 -> a11 z0 + a21 z1
    const PolyState out = act(g, PolyState::monomial(1, 0, 1, 0));
    CHECK(std::abs(out.coeff(1, 0) - g.a11) < 1e-15);
    CHECK(std::abs(out.coeff(0, 0) - g.a21) < 1e-15);
  }

  TEST_CASE("oracle is a representation") {
    const GroupElement g1 = to_matrix(a1), g2 = to_matrix(a2);
    for (int tl = 0; tl <= 6; ++tl) {
      const HalfInt l = HalfInt::from_twice(tl);
      const CMatrix lhs = oracle_matrix(l, g1 * g2).entries;
      const CMatrix rhs = oracle_matrix(l, g1).entries * oracle_matrix(l, g2).entries;
      CHECK(relative_deviation(lhs, rhs) < 1e-13);
    }
  }

  TEST_CASE("double sum reproduces the polynomial model") {
    for (int tl = 0; tl <= 6; ++tl) {
      const HalfInt l = HalfInt::from_twice(tl);
      CHECK(relative_deviation(rep_matrix(l, a1).entries, oracle_matrix(l, to_matrix(a1)).entries) < 1e-13);
    }
  }

  TEST_CASE("conjugate sector uses the conjugate element") {
    const HalfInt l = HalfInt::from_twice(3);
    const GroupElement g = to_matrix(a2);
    CHECK(relative_deviation(oracle_matrix_dotted(l, g).entries, oracle_matrix(l, g.conj()).entries) < 1e-14);
  }

  TEST_CASE("bidegree (2l, 2l') is the tensor product") {
    const HalfInt l = kHalf, lp(1);
    const GroupElement g = to_matrix(a1);
    const CMatrix big = oracle_matrix_bidegree(l, lp, g);
    const RepMatrix u = oracle_matrix(l, g), v = oracle_matrix_dotted(lp, g);
    double worst = 0.0;
    for (HalfInt m : projections(l))
      for (HalfInt mb : projections(lp))
        for (HalfInt n : projections(l))
          for (HalfInt nb : projections(lp)) {
            const int r = index_of(l, m) * dim(lp) + index_of(lp, mb);
            const int c = index_of(l, n) * dim(lp) + index_of(lp, nb);
            worst = std::max(worst, std::abs(big(r, c) - u.at(m, n) * v.at(mb, nb)));
          }
    CHECK(worst < 1e-14);
  }
}
