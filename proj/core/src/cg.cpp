#include "lh/cg.hpp"

#include <cmath>

#include "lh/errors.hpp"
#include "lh/hyper.hpp"
#include "lh/specfun.hpp"

namespace lh {

namespace {

using boost::multiprecision::cpp_int;

cpp_int fact(int n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  cpp_int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

int iv(HalfInt h) { return h.to_int(); }

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

// (-1)^{l1-j} sqrt(radicand) * S with S the alternating factorial sum
struct RacahParts {
  int sign;
  Rational radicand;
  Rational sum;
};

RacahParts racah_parts(const CGIndex& c) {
  const int a = iv(c.l1 - c.j), b = iv(c.l1 + c.j), d = iv(c.l2 + c.k), e = iv(c.l2 - c.k);
  const int lm = iv(c.l - c.m), lp = iv(c.l + c.m);
  const int s12 = iv(c.l1 + c.l2 - c.l), t1 = iv(c.l1 - c.l2 + c.l), t2 = iv(c.l2 - c.l1 + c.l);
  const int big = iv(c.l1 + c.l2 + c.l) + 1;
  const int two_l1 = c.l.twice() + 1;
  Rational rad(cpp_int(two_l1) * fact(b) * fact(a) * fact(d) * fact(lm) * fact(t2),
               fact(e) * fact(lp) * fact(s12) * fact(t1) * fact(big));
  const int x = iv(c.l1 + c.l2 - c.m), y = iv(c.l2 - c.l1 + c.m);
  Rational s = 0;
  for (int k = 0; k <= std::min(lm, a); ++k) {
    if (y + k < 0 || x - k < 0) continue;
    Rational term(fact(lp + k) * fact(x - k), fact(k) * fact(lm - k) * fact(a - k) * fact(y + k));
    s += (k % 2 == 0) ? term : Rational(-term);
  }
  return {parity_sign(a), rad, s};
}

}  // namespace

bool is_valid(const CGIndex& c) {
  if (c.l1 < 0 || c.l2 < 0 || c.l < 0) return false;
  if (!(c.l1 + c.l2 + c.l).is_integer()) return false;
  const HalfInt d = c.l1 > c.l2 ? c.l1 - c.l2 : c.l2 - c.l1;
  if (c.l < d || c.l > c.l1 + c.l2) return false;
  return is_projection(c.l1, c.j) && is_projection(c.l2, c.k) && is_projection(c.l, c.m);
}

bool selection_rule(const CGIndex& c) { return is_valid(c) && c.m == c.j + c.k; }

double clebsch_gordan(const CGIndex& c) {
  if (!selection_rule(c)) return 0.0;
  const double l1 = c.l1.value(), l2 = c.l2.value(), l = c.l.value();
  const double j = c.j.value(), m = c.m.value();
  const int ifl = iv(c.l1 - c.j);
  // radicand: (2l+1)(l+m)!(l2-l1+l)!(l1+j)!(l2+k)! / [(l1-l2+l)!(l1+l2-l)!(l1+l2+l+1)!(l1-j)!(l2-k)!(l-m)!]
  const double num = (2 * l + 1) * factorial(iv(c.l + c.m)) * factorial(iv(c.l2 - c.l1 + c.l)) *
                     factorial(iv(c.l1 + c.j)) * factorial(iv(c.l2 + c.k));
  const double den = factorial(iv(c.l1 - c.l2 + c.l)) * factorial(iv(c.l1 + c.l2 - c.l)) *
                     factorial(iv(c.l1 + c.l2 + c.l) + 1) * factorial(ifl) *
                     factorial(iv(c.l2 - c.k)) * factorial(iv(c.l - c.m));
  const double f = hyp3f2_unit_regularized(l + m + 1, m - l, j - l1, m - l1 - l2, l2 - l1 + m + 1);
  return parity_sign(ifl) * gamma_int(iv(c.l1 + c.l2 - c.m) + 1) * f * std::sqrt(num / den);
}

double clebsch_gordan_racah(const CGIndex& c) {
  if (!selection_rule(c)) return 0.0;
  const RacahParts p = racah_parts(c);
  return p.sign * std::sqrt(p.radicand.convert_to<double>()) * p.sum.convert_to<double>();
}

ExactCG clebsch_gordan_exact(const CGIndex& c) {
  ExactCG r;
  if (!selection_rule(c)) return r;
  const RacahParts p = racah_parts(c);
  if (p.sum == 0) return r;
  r.sign = p.sign * (p.sum > 0 ? 1 : -1);
  r.square = p.radicand * p.sum * p.sum;
  return r;
}

std::string ExactCG::str() const {
  if (sign == 0) return "0";
  const std::string s = sign > 0 ? "" : "-";
  if (square == 1) return s + "1";
  return s + "sqrt(" + boost::multiprecision::numerator(square).str() + "/" +
         boost::multiprecision::denominator(square).str() + ")";
}

double ExactCG::value() const { return sign * std::sqrt(square.convert_to<double>()); }

double cg_sl2c(const CGIndex& undotted, const CGIndex& dotted) {
  return clebsch_gordan(undotted) * clebsch_gordan(dotted);
}

double cg_orthogonality_residual(HalfInt l1, HalfInt l2) {
  const HalfInt lo = l1 > l2 ? l1 - l2 : l2 - l1;
  double worst = 0.0;
  for (HalfInt L = lo; L <= l1 + l2; L += 1)
    for (HalfInt Lp = lo; Lp <= l1 + l2; Lp += 1)
      for (HalfInt m : projections(L))
        for (HalfInt mp : projections(Lp)) {
          if (m != mp) continue;  // sum vanishes identically otherwise
          double s = 0.0;
          for (HalfInt j : projections(l1)) {
            const HalfInt k = m - j;
            if (!is_projection(l2, k)) continue;
            s += clebsch_gordan({l1, l2, L, j, k, m}) * clebsch_gordan({l1, l2, Lp, j, k, mp});
          }
          worst = std::max(worst, std::abs(s - (L == Lp ? 1.0 : 0.0)));
        }
  // completeness over the coupled index
  for (HalfInt j : projections(l1))
    for (HalfInt k : projections(l2))
      for (HalfInt jp : projections(l1)) {
        const HalfInt kp = j + k - jp;
        if (!is_projection(l2, kp)) continue;
        double s = 0.0;
        for (HalfInt L = lo; L <= l1 + l2; L += 1) {
          if (!is_projection(L, j + k)) continue;
          s += clebsch_gordan({l1, l2, L, j, k, j + k}) * clebsch_gordan({l1, l2, L, jp, kp, j + k});
        }
        worst = std::max(worst, std::abs(s - (j == jp ? 1.0 : 0.0)));
      }
  return worst;
}

std::vector<std::vector<Rational>> printed_bbar_l1(HalfInt l, HalfInt m) {
  const Rational L(l.twice(), 2), M(m.twice(), 2);
  auto q = [](const Rational& a, const Rational& b) { return b == 0 ? Rational(0) : Rational(a / b); };
  return {
      {q((L - M) * (L - M + 1), (2 * L + 1) * (2 * L + 2)), q((L + M + 1) * (L - M), 2 * L * (L + 1)),
       q((L + M) * (L + M + 1), 2 * L * (2 * L + 1))},
      {q((L + M + 1) * (L - M + 1), (2 * L + 1) * (L + 1)), q(M * M, L * (L + 1)),
       q((L + M) * (L - M), L * (2 * L + 1))},
      {q((L + M) * (L + M + 1), (2 * L + 1) * (2 * L + 2)), q((L + M) * (L - M + 1), 2 * L * (L + 1)),
       q((L - M) * (L - M + 1), 2 * L * (2 * L + 1))},
  };
}

std::vector<std::vector<Rational>> printed_bbar_half(HalfInt l, HalfInt m) {
  const Rational L(l.twice(), 2), M(m.twice(), 2), h(1, 2);
  const Rational a = (L - M + h) / (2 * L + 1), b = (L + M + h) / (2 * L + 1);
  return {{a, b}, {b, a}};
}

namespace {

CGIndex bbar_index(bool half, HalfInt l, HalfInt m, int row, int col) {
  if (half) {
    const HalfInt mu = HalfInt::from_twice(2 * row - 1), L = l + HalfInt::from_twice(1 - 2 * col);
    return {kHalf, l, L, mu, m - mu, m};
  }
  const HalfInt mu(row - 1), L = l + HalfInt(1 - col);
  return {1, l, L, mu, m - mu, m};
}

std::vector<std::vector<Rational>> cg_squared(bool half, HalfInt l, HalfInt m) {
  const int n = half ? 2 : 3;
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(n, Rational(0)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const CGIndex idx = bbar_index(half, l, m, r, c);
      if (selection_rule(idx)) t[r][c] = clebsch_gordan_exact(idx).square;
    }
  return t;
}

}  // namespace

bool bbar_admissible(bool half, HalfInt l, HalfInt m, int row, int col) {
  return selection_rule(bbar_index(half, l, m, row, col));
}

std::vector<std::vector<Rational>> cg_squared_l1(HalfInt l, HalfInt m) { return cg_squared(false, l, m); }

std::vector<std::vector<Rational>> cg_squared_half(HalfInt l, HalfInt m) { return cg_squared(true, l, m); }

namespace {

// printed right-hand prefactor (without the M^l factor), l1 = 1
cplx printed_prefactor_l1(int row, const ComplexEulerAngles& a) {
  const double th = a.theta, ta = a.tau;
  const double c2 = std::cos(th / 2), s2 = std::sin(th / 2);
  const double ch2 = std::cosh(ta / 2), sh2 = std::sinh(ta / 2);
  const cplx p1 = c2 * c2 * ch2 * ch2 + kI * std::sin(th) * std::sinh(ta) / 2.0 - s2 * s2 * sh2 * sh2;
  const cplx p2 = (std::cos(th) * std::sinh(ta) + kI * std::sin(th) * std::cosh(ta)) / std::sqrt(2.0);
  const cplx p3 = c2 * c2 * sh2 * sh2 + kI * std::sin(th) * std::sinh(ta) / 2.0 - s2 * s2 * ch2 * ch2;
  const cplx p5 = std::cos(th) * std::cosh(ta) + kI * std::sin(th) * std::sinh(ta);
  const cplx u = a.eps + kI * a.phi, v = a.veps + kI * a.psi;
  switch (row) {
    case 1: return p1 * std::exp(u + v);
    case 2: return p2 * std::exp(-v);
    case 3: return p3 * std::exp(u - v);
    case 4: return p2 * std::exp(v);
    case 5: return p5;
    case 6: return p2 * std::exp(-v);
    case 7: return p3 * std::exp(-u + v);
    case 8: return p2 * std::exp(-u);
    default: return p1 * std::exp(-u - v);
  }
}

cplx printed_prefactor_half(int row, const ComplexEulerAngles& a) {
  const double c2 = std::cos(a.theta / 2), s2 = std::sin(a.theta / 2);
  const double ch2 = std::cosh(a.tau / 2), sh2 = std::sinh(a.tau / 2);
  const cplx d = c2 * ch2 + kI * s2 * sh2, o = c2 * sh2 + kI * s2 * ch2;
  const cplx u = a.eps + kI * a.phi, v = a.veps + kI * a.psi;
  switch (row) {
    case 1: return d * std::exp((u + v) / 2.0);
    case 2: return o * std::exp((u - v) / 2.0);
    case 3: return o * std::exp((-u + v) / 2.0);
    default: return d * std::exp((-u - v) / 2.0);
  }
}

}  // namespace

CouplingResult coupling_recurrence_residual(CouplingKind kind, int row, HalfInt l, HalfInt j,
                                            HalfInt m, const ComplexEulerAngles& a,
                                            CouplingForm form) {
  const bool nine = kind == CouplingKind::NineL1;
  const int rows = nine ? 9 : 4;
  if (row < 1 || row > rows) throw DomainError("coupling_recurrence_residual: row out of range");
  const HalfInt l1 = nine ? HalfInt(1) : kHalf;
  if (l < l1 || !is_projection(l + l1, j) || !is_projection(l + l1, m))
    throw DomainError("coupling_recurrence_residual: indices out of range");

  const int per = nine ? 3 : 2;
  // mu' labels the row of the b^m table, mu the row of the b^j table
  const HalfInt mup = nine ? HalfInt((row - 1) / per - 1) : HalfInt::from_twice(2 * ((row - 1) / per) - 1);
  const HalfInt mu = nine ? HalfInt((row - 1) % per - 1) : HalfInt::from_twice(2 * ((row - 1) % per) - 1);
  const HalfInt js = j - mu, ms = m - mup;
  if (!is_projection(l, js) || !is_projection(l, ms))
    return {true, 0.0, "skipped: shifted index out of range"};

  std::vector<HalfInt> weights;
  for (HalfInt L = l + l1; L >= l - l1; L -= 1) weights.push_back(L);

  cplx lhs = 0.0;
  if (form == CouplingForm::Corrected) {
    for (HalfInt L : weights) {
      if (L < 0 || !is_projection(L, j) || !is_projection(L, m)) continue;
      const double cm = clebsch_gordan({l1, l, L, mup, m - mup, m});
      const double cj = clebsch_gordan({l1, l, L, mu, j - mu, j});
      if (cm == 0.0 || cj == 0.0) continue;
      lhs += cm * m_function(L, j, m, a) * cj;
    }
  } else {
    const auto bm = nine ? printed_bbar_l1(l, m) : printed_bbar_half(l, m);
    const auto bj = nine ? printed_bbar_l1(l, j) : printed_bbar_half(l, j);
    const int rm = (row - 1) / per, rj = (row - 1) % per;
    for (std::size_t c = 0; c < weights.size(); ++c) {
      const HalfInt L = weights[c];
      if (L < 0 || !is_projection(L, j) || !is_projection(L, m)) continue;
      lhs += bm[rm][c].convert_to<double>() * m_function(L, j, m, a) * bj[rj][c].convert_to<double>();
    }
  }

  const cplx ml = m_function(l, js, ms, a);
  cplx rhs;
  if (form == CouplingForm::Corrected)
    rhs = m_function(l1, mu, mup, a) * ml;
  else
    rhs = (nine ? printed_prefactor_l1(row, a) : printed_prefactor_half(row, a)) * ml;

  CouplingResult r;
  r.residual = std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
  r.status = "ok";
  return r;
}

}  // namespace lh
