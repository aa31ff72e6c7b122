#include <cmath>

#include "doctest.h"
#include "lh/errors.hpp"
#include "lh/halfint.hpp"

using lh::HalfInt;

TEST_SUITE("halfint") {
  TEST_CASE("parse accepts fractions, integers and decimals") {
    CHECK(HalfInt::parse("3/2").twice() == 3);
    CHECK(HalfInt::parse("-1/2").twice() == -1);
    CHECK(HalfInt::parse("2").twice() == 4);
    CHECK(HalfInt::parse("-0.5").twice() == -1);
    CHECK(HalfInt::parse("1.0").twice() == 2);
  }

  TEST_CASE("parse rejects everything else") {
    for (const char* bad : {"1/3", "", "abc", "0.25", "3/", "/2", "1/2x", "2/4"})
      CHECK_THROWS_AS(HalfInt::parse(bad), lh::DomainError);
  }

  TEST_CASE("str round-trips") {
    for (int t = -7; t <= 7; ++t) {
      const HalfInt h = HalfInt::from_twice(t);
      CHECK(HalfInt::parse(h.str()) == h);
    }
    CHECK(HalfInt::from_twice(-3).str() == "-3/2");
    CHECK(HalfInt(2).str() == "2");
  }

  TEST_CASE("projections are ascending from -l") {
    const auto ps = lh::projections(HalfInt::from_twice(3));
    REQUIRE(ps.size() == 4);
    CHECK(ps.front() == HalfInt::from_twice(-3));
    CHECK(ps.back() == HalfInt::from_twice(3));
    CHECK(lh::index_of(HalfInt::from_twice(3), HalfInt::from_twice(-1)) == 1);
    CHECK_THROWS_AS(lh::projections(HalfInt(-1)), lh::DomainError);
  }

  TEST_CASE("is_projection checks range and parity") {
    const HalfInt l = HalfInt::from_twice(3);
    CHECK(lh::is_projection(l, lh::kHalf));
    CHECK_FALSE(lh::is_projection(l, HalfInt(1)));
    CHECK_FALSE(lh::is_projection(l, HalfInt::from_twice(5)));
  }

  TEST_CASE("ladder coefficient") {
    const HalfInt l(1);
    CHECK(lh::ladder_alpha(l, -l) == doctest::Approx(0.0));
    CHECK(lh::ladder_alpha(l, l + 1) == doctest::Approx(0.0));
    CHECK(lh::ladder_alpha(l, 0) == doctest::Approx(std::sqrt(2.0)));
    CHECK(lh::ladder_alpha(lh::kHalf, lh::kHalf) == doctest::Approx(1.0));
    CHECK(lh::ladder_alpha_squared_x4(HalfInt::from_twice(3), lh::kHalf) == 16);
    CHECK_THROWS_AS(lh::ladder_alpha(l, HalfInt(3)), lh::DomainError);
  }
}
