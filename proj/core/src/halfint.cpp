#include "lh/halfint.hpp"

#include <charconv>
#include <cmath>

#include "lh/errors.hpp"

namespace lh {

namespace {

bool parse_int(std::string_view s, int& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  const std::string msg = "malformed half-integer '" + std::string(text) + "'";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    int num = 0, den = 0;
    if (!parse_int(text.substr(0, slash), num) || !parse_int(text.substr(slash + 1), den))
      throw DomainError(msg);
    if (den == 1) return HalfInt(num);
    if (den == 2) return from_twice(num);
    throw DomainError(msg);
  }
  int k = 0;
  if (parse_int(text, k)) return HalfInt(k);
  // decimal form such as 1.5 or -0.5
  std::string s(text);
  char* end = nullptr;
  const double x = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(x)) throw DomainError(msg);
  const double t = 2.0 * x;
  if (t != std::nearbyint(t) || std::abs(t) > 1e9) throw DomainError(msg);
  return from_twice(static_cast<int>(t));
}

int HalfInt::to_int() const {
  if (!is_integer()) throw DomainError("half-integer " + str() + " is not an integer");
  return twice_ / 2;
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

std::vector<HalfInt> projections(HalfInt l) {
  if (l.twice() < 0) throw DomainError("negative weight l = " + l.str());
  std::vector<HalfInt> out;
  out.reserve(l.twice() + 1);
  for (int t = -l.twice(); t <= l.twice(); t += 2) out.push_back(HalfInt::from_twice(t));
  return out;
}

bool is_projection(HalfInt l, HalfInt m) {
  return l.twice() >= 0 && std::abs(m.twice()) <= l.twice() && (l - m).is_integer();
}

long long ladder_alpha_squared_x4(HalfInt l, HalfInt n) {
  if (l.twice() < 0 || !(l - n).is_integer() || n.twice() < -l.twice() ||
      n.twice() > l.twice() + 2)
    throw DomainError("ladder_alpha: n = " + n.str() + " out of range for l = " + l.str());
  const long long a = l.twice() + n.twice();      // 2(l+n)
  const long long b = l.twice() - n.twice() + 2;  // 2(l-n+1)
  return a * b;
}

double ladder_alpha(HalfInt l, HalfInt n) {
  return 0.5 * std::sqrt(static_cast<double>(ladder_alpha_squared_x4(l, n)));
}

}  // namespace lh
