#include "lh/hyper.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "lh/errors.hpp"
#include "lh/specfun.hpp"

namespace lh {

namespace {

void require(HalfInt l, HalfInt m, HalfInt n, const char* who) {
  if (!is_projection(l, m) || !is_projection(l, n))
    throw DomainError(std::string(who) + ": indices (" + m.str() + "," + n.str() +
                      ") out of range for l = " + l.str());
}

double ipow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

cplx ipow_i(int e) {
  static const cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((e % 4) + 4) % 4];
}

// The triple sum over k, j, s exactly as it stands, with tan/tanh powers merged into
// cos/sin and cosh/sinh powers.
cplx z_double_sum(HalfInt l, HalfInt m, HalfInt n, double theta, double tau) {
  const int L2 = l.twice();
  const int lmm = (l - m).to_int(), lpm = (l + m).to_int();
  const int lmn = (l - n).to_int(), lpn = (l + n).to_int();
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const double ch = std::cosh(tau / 2), sh = std::sinh(tau / 2);
  std::vector<cplx> terms;
  for (HalfInt k : projections(l)) {
    const int lmk = (l - k).to_int(), lpk = (l + k).to_int();
    const int mk = (m - k).to_int(), nk = (n - k).to_int();
    const double fk = factorial(lmk) * factorial(lpk);
    const double norm = std::sqrt(factorial(lmm) * factorial(lpm) * fk) *
                        std::sqrt(factorial(lmn) * factorial(lpn) * fk);
    for (int j = std::max(0, -mk); j <= std::min(lmm, lpk); ++j) {
      const int e = mk + 2 * j;
      const cplx tj = ipow_i(e) * ipow(c, L2 - e) * ipow(s, e) /
                      (factorial(j) * factorial(lmm - j) * factorial(lpk - j) * factorial(mk + j));
      for (int q = std::max(0, -nk); q <= std::min(lmn, lpk); ++q) {
        const int f = nk + 2 * q;
        const double tq = ipow(ch, L2 - f) * ipow(sh, f) /
                          (factorial(q) * factorial(lmn - q) * factorial(lpk - q) * factorial(nk + q));
        terms.push_back(norm * tj * tq);
      }
    }
  }
  return compensated_sum(terms);
}

}  // namespace

cplx z_function(HalfInt l, HalfInt m, HalfInt n, double theta, double tau, ZEvalMethod method) {
  require(l, m, n, "z_function");
  switch (method) {
    case ZEvalMethod::DoubleSum:
      return z_double_sum(l, m, n, theta, tau);
    case ZEvalMethod::Factorized: {
      std::vector<cplx> terms;
      for (HalfInt k : projections(l))
        terms.push_back(spherical_p(l, m, k, theta) * jacobi_p(l, k, n, tau));
      return compensated_sum(terms);
    }
    case ZEvalMethod::HypergeometricProduct: {
      std::vector<cplx> terms;
      for (HalfInt k : projections(l))
        terms.push_back(spherical_p_hyp(l, m, k, theta) * jacobi_p_hyp(l, n, k, tau));
      return compensated_sum(terms);
    }
  }
  throw DomainError("z_function: unknown method");
}

ZJet z_jet(HalfInt l, HalfInt m, HalfInt n, double theta, double tau) {
  require(l, m, n, "z_jet");
  std::vector<cplx> v, dt, du;
  for (HalfInt k : projections(l)) {
    const ComplexJet p = spherical_p_jet(l, m, k, theta);
    const RealJet q = jacobi_p_jet(l, n, k, tau);
    v.push_back(p.value * q.value);
    dt.push_back(p.derivative * q.value);
    du.push_back(p.value * q.derivative);
  }
  return {compensated_sum(v), compensated_sum(dt), compensated_sum(du)};
}

cplx dotted_z_function(HalfInt l, HalfInt m, HalfInt n, double theta, double tau) {
  return z_function(l, m, n, theta, -tau);
}

ZJet dotted_z_jet(HalfInt l, HalfInt m, HalfInt n, double theta, double tau) {
  ZJet j = z_jet(l, m, n, theta, -tau);
  j.d_tau = -j.d_tau;
  return j;
}

cplx m_function(HalfInt l, HalfInt m, HalfInt n, const ComplexEulerAngles& a,
                ZEvalMethod method) {
  const cplx z = z_function(l, m, n, a.theta, a.tau, method);
  return std::exp(-m.value() * cplx(a.eps, a.phi)) * z * std::exp(-n.value() * cplx(a.veps, a.psi));
}

GenHypersphericalPoint evaluate_point(HalfInt l, HalfInt m, HalfInt n,
                                      const ComplexEulerAngles& a) {
  return {l, m, n, a, m_function(l, m, n, a)};
}

RepMatrix explicit_t_matrix(HalfInt l, double theta, double tau) {
  RepMatrix t(l);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const double ch = std::cosh(tau / 2), sh = std::sinh(tau / 2);
  if (l.twice() == 0) {
    t.entries(0, 0) = 1.0;
  } else if (l.twice() == 1) {
    const cplx diag(c * ch, s * sh), off(c * sh, s * ch);
    t.entries(0, 0) = diag;
    t.entries(0, 1) = off;
    t.entries(1, 0) = off;
    t.entries(1, 1) = diag;
  } else if (l.twice() == 2) {
    const double half_ss = std::sin(theta) * std::sinh(tau) / 2;
    const cplx corner(c * c * ch * ch - s * s * sh * sh, half_ss);
    const cplx anti(c * c * sh * sh - s * s * ch * ch, half_ss);
    const cplx edge = cplx(std::cos(theta) * std::sinh(tau), std::sin(theta) * std::cosh(tau)) /
                      std::sqrt(2.0);
    const cplx centre(std::cos(theta) * std::cosh(tau), std::sin(theta) * std::sinh(tau));
    t.entries(0, 0) = corner;
    t.entries(2, 2) = corner;
    t.entries(0, 2) = anti;
    t.entries(2, 0) = anti;
    t.entries(0, 1) = t.entries(1, 0) = t.entries(1, 2) = t.entries(2, 1) = edge;
    t.entries(1, 1) = centre;
  } else {
    throw UnsupportedError("explicit_t_matrix: only l = 0, 1/2, 1 are tabulated");
  }
  return t;
}

double addition_theorem_residual(HalfInt l, HalfInt m, HalfInt n, const ComplexEulerAngles& a1,
                                 const ComplexEulerAngles& a2, AdditionForm form) {
  require(l, m, n, "addition_theorem_residual");
  ComplexEulerAngles g1 = a1, g2 = a2;
  if (form == AdditionForm::Special) {
    g1 = {0.0, 0.0, a1.theta, a1.tau, 0.0, 0.0};
    g2 = {a2.phi, a2.eps, a2.theta, a2.tau, 0.0, 0.0};
  }
  const ComplexEulerAngles g = compose(g1, g2);
  const double mv = m.value(), nv = n.value();
  const cplx z = z_function(l, m, n, g.theta, g.tau);

  cplx lhs;
  cplx rhs = 0.0;
  // exponent multiplying k in the sum
  cplx kexp;
  switch (form) {
    case AdditionForm::Special:
      lhs = std::exp(-mv * cplx(g.eps, g.phi) - nv * cplx(g.veps, g.psi)) * z;
      kexp = cplx(g2.eps, g2.phi);
      break;
    case AdditionForm::General:
      lhs = std::exp(-mv * cplx(g.eps - g1.eps, g.phi - g1.phi) -
                     nv * cplx(g.veps - g2.veps, g.psi - g2.psi)) *
            z;
      kexp = cplx(g2.eps + g1.veps, g2.phi + g1.psi);
      break;
    case AdditionForm::GeneralPrinted:
      lhs = std::exp(-mv * cplx(g.eps + g1.eps, g1.phi - g.phi) -
                     nv * cplx(g.veps + g2.veps, -(g2.psi - g.psi))) *
            z;
      kexp = cplx(g2.eps + g1.veps, g2.phi + g1.psi);
      break;
  }
  std::vector<cplx> terms;
  for (HalfInt k : projections(l))
    terms.push_back(std::exp(-k.value() * kexp) * z_function(l, m, k, g1.theta, g1.tau) *
                    z_function(l, k, n, g2.theta, g2.tau));
  rhs = compensated_sum(terms);
  // double-cover sign of the recovered angles
  const double r = std::min(std::abs(lhs - rhs), std::abs(lhs + rhs));
  return r / (1.0 + std::abs(rhs));
}

}  // namespace lh
