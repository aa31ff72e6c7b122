#include "lh/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

#include "lh/errors.hpp"

namespace lh {

namespace {

constexpr int kMaxFactorial = 170;

const std::array<double, kMaxFactorial + 1>& factorial_table() {
  static const auto table = [] {
    std::array<double, kMaxFactorial + 1> t{};
    t[0] = 1.0;
    for (int i = 1; i <= kMaxFactorial; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table;
}

double ipow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// i^e for integer e
cplx ipow_i(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::nearbyint(x); }

void require_projection(HalfInt l, HalfInt m, HalfInt n, const char* who) {
  if (!is_projection(l, m) || !is_projection(l, n))
    throw DomainError(std::string(who) + ": indices (" + m.str() + "," + n.str() +
                      ") out of range for l = " + l.str());
}

// Integer quantities shared by the P and Jacobi sums for index pair (a, b):
// sqrt((l-a)!(l+a)!(l-b)!(l+b)!) sum_j x^{2l-e} y^e / (j!(l-a-j)!(l+b-j)!(a-b+j)!), e = a-b+2j.
struct IndexSum {
  int lma, lpa, lmb, lpb, amb, two_l, jlo, jhi;
  double norm;
};

IndexSum index_sum(HalfInt l, HalfInt a, HalfInt b) {
  IndexSum s{};
  s.lma = (l - a).to_int();
  s.lpa = (l + a).to_int();
  s.lmb = (l - b).to_int();
  s.lpb = (l + b).to_int();
  s.amb = (a - b).to_int();
  s.two_l = l.twice();
  s.jlo = std::max(0, -s.amb);
  s.jhi = std::min(s.lma, s.lpb);
  s.norm = std::sqrt(factorial(s.lma) * factorial(s.lpa) * factorial(s.lmb) * factorial(s.lpb));
  return s;
}

double term_denominator(const IndexSum& s, int j) {
  return factorial(j) * factorial(s.lma - j) * factorial(s.lpb - j) * factorial(s.amb + j);
}

}  // namespace

double gamma_int(int k) {
  if (k <= 0) throw DomainError("gamma_int: pole at " + std::to_string(k));
  if (k - 1 > kMaxFactorial) throw DomainError("gamma_int: overflow at " + std::to_string(k));
  return factorial_table()[k - 1];
}

cplx compensated_sum(const std::vector<cplx>& terms) {
  double sr = 0.0, si = 0.0, cr = 0.0, ci = 0.0;
  auto add = [](double& s, double& c, double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  };
  for (const auto& z : terms) {
    add(sr, cr, z.real());
    add(si, ci, z.imag());
  }
  return {sr + cr, si + ci};
}

TermSum hyp2f1_terms(double a, double b, double c, cplx z) {
  int n_terms = -1;
  if (is_nonpositive_integer(a)) n_terms = static_cast<int>(-a);
  if (is_nonpositive_integer(b)) {
    const int nb = static_cast<int>(-b);
    n_terms = n_terms < 0 ? nb : std::min(n_terms, nb);
  }
  if (n_terms < 0)
    throw UnsupportedError("hyp2f1_terminating: series does not terminate (a = " +
                           std::to_string(a) + ", b = " + std::to_string(b) + ")");
  TermSum out;
  out.terms.reserve(n_terms + 1);
  cplx t = 1.0;
  out.terms.push_back(t);
  for (int j = 0; j < n_terms; ++j) {
    if (c + j == 0.0) throw DomainError("hyp2f1_terminating: pole in c before termination");
    t *= (a + j) * (b + j) / ((c + j) * (j + 1.0)) * z;
    out.terms.push_back(t);
  }
  out.value = compensated_sum(out.terms);
  return out;
}

cplx hyp2f1_terminating(double a, double b, double c, cplx z) {
  return hyp2f1_terms(a, b, c, z).value;
}

namespace {

int terminating_index(double a1, double a2, double a3, const char* who) {
  int n = -1;
  for (double a : {a1, a2, a3})
    if (is_nonpositive_integer(a)) {
      const int k = static_cast<int>(-a);
      n = n < 0 ? k : std::min(n, k);
    }
  if (n < 0) throw UnsupportedError(std::string(who) + ": series does not terminate");
  return n;
}

}  // namespace

double hyp3f2_unit(double a1, double a2, double a3, double b1, double b2) {
  const int n = terminating_index(a1, a2, a3, "hyp3f2_unit");
  std::vector<cplx> terms{1.0};
  double t = 1.0;
  for (int j = 0; j < n; ++j) {
    if (b1 + j == 0.0 || b2 + j == 0.0)
      throw DomainError("hyp3f2_unit: denominator pole before termination");
    t *= (a1 + j) * (a2 + j) * (a3 + j) / ((b1 + j) * (b2 + j) * (j + 1.0));
    terms.push_back(t);
  }
  return compensated_sum(terms).real();
}

double hyp3f2_unit_regularized(double a1, double a2, double a3, double b1, double b2) {
  const int n = terminating_index(a1, a2, a3, "hyp3f2_unit_regularized");
  // term_j = (a1)_j (a2)_j (a3)_j / ((b1)_j j! Gamma(b2 + j))
  std::vector<cplx> terms;
  double poch = 1.0;  // (a1)_j (a2)_j (a3)_j / ((b1)_j j!)
  for (int j = 0; j <= n; ++j) {
    if (j > 0) {
      if (b1 + j - 1 == 0.0) throw DomainError("hyp3f2_unit_regularized: pole in b1");
      poch *= (a1 + j - 1) * (a2 + j - 1) * (a3 + j - 1) / ((b1 + j - 1) * j);
    }
    const double g = b2 + j;
    if (is_nonpositive_integer(g)) continue;  // 1/Gamma at a pole
    const double inv_gamma =
        g == std::nearbyint(g) ? 1.0 / gamma_int(static_cast<int>(g)) : 1.0 / std::tgamma(g);
    terms.emplace_back(poch * inv_gamma);
  }
  return compensated_sum(terms).real();
}

ComplexJet spherical_p_jet(HalfInt l, HalfInt m, HalfInt n, double theta) {
  require_projection(l, m, n, "spherical_p");
  const IndexSum s = index_sum(l, m, n);
  const double c = std::cos(theta / 2), sn = std::sin(theta / 2);
  std::vector<cplx> val, der;
  for (int j = s.jlo; j <= s.jhi; ++j) {
    const int e = s.amb + 2 * j, a = s.two_l - e;
    const cplx w = ipow_i(e) / term_denominator(s, j);
    val.push_back(w * (ipow(c, a) * ipow(sn, e)));
    double d = 0.0;
    if (a > 0) d -= a * ipow(c, a - 1) * ipow(sn, e + 1);
    if (e > 0) d += e * ipow(c, a + 1) * ipow(sn, e - 1);
    der.push_back(w * (0.5 * d));
  }
  return {s.norm * compensated_sum(val), s.norm * compensated_sum(der)};
}

cplx spherical_p(HalfInt l, HalfInt m, HalfInt n, double theta) {
  return spherical_p_jet(l, m, n, theta).value;
}

RealJet jacobi_p_jet(HalfInt l, HalfInt m, HalfInt n, double tau) {
  require_projection(l, m, n, "jacobi_p");
  const IndexSum s = index_sum(l, m, n);
  const double ch = std::cosh(tau / 2), sh = std::sinh(tau / 2);
  std::vector<cplx> val, der;
  for (int j = s.jlo; j <= s.jhi; ++j) {
    const int e = s.amb + 2 * j, a = s.two_l - e;
    const double w = 1.0 / term_denominator(s, j);
    val.emplace_back(w * ipow(ch, a) * ipow(sh, e));
    double d = 0.0;
    if (a > 0) d += a * ipow(ch, a - 1) * ipow(sh, e + 1);
    if (e > 0) d += e * ipow(ch, a + 1) * ipow(sh, e - 1);
    der.emplace_back(w * 0.5 * d);
  }
  return {s.norm * compensated_sum(val).real(), s.norm * compensated_sum(der).real()};
}

double jacobi_p(HalfInt l, HalfInt m, HalfInt n, double tau) {
  return jacobi_p_jet(l, m, n, tau).value;
}

cplx spherical_p_hyp(HalfInt l, HalfInt m, HalfInt n, double theta, HypParams params) {
  require_projection(l, m, n, "spherical_p_hyp");
  if (m < n) return spherical_p_hyp(l, -m, -n, theta, params);
  const int d = (m - n).to_int();
  const double t = std::tan(theta / 2);
  const double pre = std::sqrt(factorial((l + m).to_int()) * factorial((l - n).to_int()) /
                               (factorial((l - m).to_int()) * factorial((l + n).to_int()))) /
                     factorial(d);
  const double shift = params == HypParams::Derived ? 0.0 : 1.0;
  const cplx f = hyp2f1_terminating((m - l).value() + shift, (-l - n).value() + shift, d + 1.0,
                                    -t * t);
  return ipow_i(d) * pre * std::pow(std::cos(theta / 2), l.twice()) * ipow(t, d) * f;
}

double jacobi_p_hyp(HalfInt l, HalfInt m, HalfInt n, double tau, HypParams params) {
  require_projection(l, m, n, "jacobi_p_hyp");
  if (m < n) return jacobi_p_hyp(l, -m, -n, tau, params);
  const int d = (m - n).to_int();
  const double t = std::tanh(tau / 2);
  const double pre = std::sqrt(factorial((l + m).to_int()) * factorial((l - n).to_int()) /
                               (factorial((l - m).to_int()) * factorial((l + n).to_int()))) /
                     factorial(d);
  const double shift = params == HypParams::Derived ? 0.0 : 1.0;
  const cplx f = hyp2f1_terminating((m - l).value() + shift, (-l - n).value() + shift, d + 1.0,
                                    t * t);
  return pre * std::pow(std::cosh(tau / 2), l.twice()) * ipow(t, d) * f.real();
}

}  // namespace lh
