#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace lh {

// Integer or half-integer, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int k) : twice_(2 * k) {}  // NOLINT: implicit from int

  static constexpr HalfInt from_twice(int t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }
  // "3/2", "-1/2", "2", "0.5"; throws DomainError on anything else.
  static HalfInt parse(std::string_view text);

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return twice_ / 2.0; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  int to_int() const;  // throws DomainError for odd twice()

  std::string str() const;

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  int twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

// -l, -l+1, ..., l
std::vector<HalfInt> projections(HalfInt l);

// |m| <= l and l - m integral
bool is_projection(HalfInt l, HalfInt m);

// position of m in projections(l); m must be a projection of l
inline int index_of(HalfInt l, HalfInt m) { return (l.twice() + m.twice()) / 2; }

inline int dim(HalfInt l) { return l.twice() + 1; }

// sqrt((l+n)(l-n+1)), defined for -l <= n <= l+1
double ladder_alpha(HalfInt l, HalfInt n);

// (l+n)(l-n+1) scaled by 4, exact
long long ladder_alpha_squared_x4(HalfInt l, HalfInt n);

}  // namespace lh
