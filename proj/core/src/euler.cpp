#include "lh/euler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lh/errors.hpp"

namespace lh {

namespace {

constexpr double kPi = std::numbers::pi;
// below this |sin(theta^c/2)| or |cos(theta^c/2)| the Euler angles are not unique
constexpr double kRecoverDegenerate = 1e-12;

double wrap(double x, double lo, double period) {
  double r = std::fmod(x - lo, period);
  if (r < 0) r += period;
  return lo + r;
}

// Angles from theta^c, e^{i phi^c} and e^{i(phi^c+psi^c)/2}.
ComplexEulerAngles assemble(cplx thetac, cplx eiphi, cplx half_sum) {
  ComplexEulerAngles a;
  a.theta = thetac.real();
  a.tau = -thetac.imag();
  a.phi = wrap(std::arg(eiphi), 0.0, 2 * kPi);
  a.eps = std::log(std::abs(eiphi));
  // e^{i psi^c} = half_sum^2 / e^{i phi^c}; psi is fixed mod 4pi by the half angle
  a.psi = wrap(2.0 * std::arg(half_sum) - a.phi, -2 * kPi, 4 * kPi);
  a.veps = 2.0 * std::log(std::abs(half_sum)) - a.eps;
  return a;
}

// theta^c with Re in [0, pi]
cplx principal_theta(cplx cos_theta) {
  cplx t = std::acos(cos_theta);
  if (t.real() < 0) t = -t;
  return t;
}

int sign_against(const GroupElement& rebuilt, const GroupElement& g) {
  return distance(rebuilt, g) <= distance(rebuilt, -g) ? 1 : -1;
}

}  // namespace

CMatrix GroupElement::as_matrix() const {
  // row/column 0 is projection -1/2
  CMatrix m(2);
  m(0, 0) = a11;
  m(0, 1) = a12;
  m(1, 0) = a21;
  m(1, 1) = a22;
  return m;
}

double distance(const GroupElement& a, const GroupElement& b) {
  return std::max({std::abs(a.a11 - b.a11), std::abs(a.a12 - b.a12), std::abs(a.a21 - b.a21),
                   std::abs(a.a22 - b.a22)});
}

GroupElement to_matrix(const ComplexEulerAngles& a) {
  const cplx th = a.theta_c(), ph = a.phi_c(), ps = a.psi_c();
  const cplx c = std::cos(th / 2.0), s = std::sin(th / 2.0);
  const cplx sum = std::exp(kI * (ph + ps) / 2.0), dif = std::exp(kI * (ph - ps) / 2.0);
  return {c * sum, kI * s * dif, kI * s / dif, c / sum};
}

GroupElement to_matrix_factored(const ComplexEulerAngles& a) {
  return subgroup_matrix(Subgroup::a3, a.phi) * subgroup_matrix(Subgroup::b3, a.eps) *
         subgroup_matrix(Subgroup::a1, a.theta) * subgroup_matrix(Subgroup::b1, a.tau) *
         subgroup_matrix(Subgroup::a3, a.psi) * subgroup_matrix(Subgroup::b3, a.veps);
}

AngleRecovery from_matrix(const GroupElement& g) {
  const cplx cc = g.a11 * g.a22;   // cos^2(theta^c/2)
  const cplx ss = -g.a12 * g.a21;  // sin^2(theta^c/2)
  AngleRecovery out;

  if (std::abs(ss) < kRecoverDegenerate * kRecoverDegenerate) {
    // diagonal: only phi^c + psi^c is determined, psi := 0
    out.unique = false;
    const cplx phic = -2.0 * kI * std::log(g.a11);
    ComplexEulerAngles a;
    a.phi = wrap(phic.real(), 0.0, 2 * kPi);
    a.eps = -phic.imag();
    out.angles = a;
    out.sign = sign_against(to_matrix(a), g);
    return out;
  }
  if (std::abs(cc) < kRecoverDegenerate * kRecoverDegenerate) {
    // anti-diagonal: theta^c = pi, only phi^c - psi^c is determined, psi := 0
    out.unique = false;
    const cplx phic = -2.0 * kI * std::log(g.a12 / kI);
    ComplexEulerAngles a;
    a.theta = kPi;
    a.phi = wrap(phic.real(), 0.0, 2 * kPi);
    a.eps = -phic.imag();
    out.angles = a;
    out.sign = sign_against(to_matrix(a), g);
    return out;
  }

  const cplx thetac = principal_theta(cc - ss);
  const cplx c = std::cos(thetac / 2.0), s = std::sin(thetac / 2.0);
  const cplx half_sum = g.a11 / c;         // e^{i(phi^c+psi^c)/2}
  const cplx half_dif = g.a12 / (kI * s);  // e^{i(phi^c-psi^c)/2}
  out.angles = assemble(thetac, half_sum * half_dif, half_sum);
  out.sign = sign_against(to_matrix(out.angles), g);
  return out;
}

Composition compose_detailed(const ComplexEulerAngles& a1, const ComplexEulerAngles& a2) {
  const cplx t1 = a1.theta_c(), t2 = a2.theta_c();
  const cplx chi = a2.phi_c() + a1.psi_c();
  const cplx cos_t = std::cos(t1) * std::cos(t2) - std::sin(t1) * std::sin(t2) * std::cos(chi);
  const cplx thetac = principal_theta(cos_t);
  const cplx sin_t = std::sin(thetac);
  if (std::abs(sin_t) < kComposeDegenerate) {
    return {from_matrix(to_matrix(a1) * to_matrix(a2)).angles, true};
  }
  const cplx eiphi = std::exp(kI * a1.phi_c()) *
                     (std::sin(t1) * std::cos(t2) + std::cos(t1) * std::sin(t2) * std::cos(chi) +
                      kI * std::sin(t2) * std::sin(chi)) /
                     sin_t;
  const cplx c1 = std::cos(t1 / 2.0), s1 = std::sin(t1 / 2.0);
  const cplx c2 = std::cos(t2 / 2.0), s2 = std::sin(t2 / 2.0);
  const cplx half_sum = std::exp(kI * (a1.phi_c() + a2.psi_c()) / 2.0) *
                        (c1 * c2 * std::exp(kI * chi / 2.0) - s1 * s2 * std::exp(-kI * chi / 2.0)) /
                        std::cos(thetac / 2.0);
  return {assemble(thetac, eiphi, half_sum), false};
}

ComplexEulerAngles compose(const ComplexEulerAngles& a1, const ComplexEulerAngles& a2) {
  return compose_detailed(a1, a2).angles;
}

ComplexEulerAngles compose_omega2(const ComplexEulerAngles& left, cplx phi2c, cplx theta2c,
                                  cplx psi2c, Omega2Form form) {
  const cplx t1 = left.theta_c(), t2 = theta2c;
  const cplx chi = phi2c + left.psi_c();
  const cplx cos_t = std::cos(t1) * std::cos(t2) + std::sin(t1) * std::sin(t2) * std::sin(chi);
  const cplx thetac = principal_theta(cos_t);
  const cplx sin_t = std::sin(thetac);
  if (std::abs(sin_t) < kComposeDegenerate) throw PoleError("compose_omega2: sin theta^c ~ 0");
  const cplx eiphi = std::exp(kI * left.phi_c()) *
                     (std::sin(t1) * std::cos(t2) - std::cos(t1) * std::sin(t2) * std::sin(chi) +
                      kI * std::sin(t2) * std::cos(chi)) /
                     sin_t;
  const cplx c1 = std::cos(t1 / 2.0), s1 = std::sin(t1 / 2.0);
  const cplx c2 = std::cos(t2 / 2.0), s2 = std::sin(t2 / 2.0);
  const cplx k = form == Omega2Form::Corrected ? kI : cplx(1.0);
  const cplx half_sum = std::exp(kI * (left.phi_c() + psi2c) / 2.0) *
                        (c1 * c2 * std::exp(kI * chi / 2.0) + k * s1 * s2 * std::exp(-kI * chi / 2.0)) /
                        std::cos(thetac / 2.0);
  return assemble(thetac, eiphi, half_sum);
}

GroupElement subgroup_matrix(Subgroup kind, cplx t) {
  const bool real_kind = kind != Subgroup::w1 && kind != Subgroup::w2 && kind != Subgroup::w3;
  if (real_kind && t.imag() != 0.0)
    throw DomainError("subgroup_matrix: a/b subgroups take a real parameter");
  switch (kind) {
    case Subgroup::b1: t *= -kI; [[fallthrough]];
    case Subgroup::a1:
    case Subgroup::w1: {
      const cplx c = std::cos(t / 2.0), s = std::sin(t / 2.0);
      return {c, kI * s, kI * s, c};
    }
    case Subgroup::b2: t *= -kI; [[fallthrough]];
    case Subgroup::a2:
    case Subgroup::w2: {
      const cplx c = std::cos(t / 2.0), s = std::sin(t / 2.0);
      return {c, -s, s, c};
    }
    case Subgroup::b3: t *= -kI; [[fallthrough]];
    case Subgroup::a3:
    case Subgroup::w3: {
      const cplx e = std::exp(kI * t / 2.0);
      return {e, 0.0, 0.0, 1.0 / e};
    }
  }
  throw DomainError("subgroup_matrix: unknown kind");
}

}  // namespace lh
