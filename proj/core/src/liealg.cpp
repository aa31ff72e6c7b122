#include "lh/liealg.hpp"

#include <cmath>

#include "lh/errors.hpp"
#include "lh/hyper.hpp"

namespace lh {

namespace {

enum Axis { kPhi = 0, kEps, kTheta, kTau, kPsi, kVeps };

double& component(ComplexEulerAngles& a, int axis) {
  switch (axis) {
    case kPhi: return a.phi;
    case kEps: return a.eps;
    case kTheta: return a.theta;
    case kTau: return a.tau;
    case kPsi: return a.psi;
    default: return a.veps;
  }
}

struct Trig {
  cplx cos_psi, sin_psi, csc_theta, cot_theta;
};

Trig trig_at(const ComplexEulerAngles& p) {
  const cplx st = std::sin(p.theta_c());
  if (std::abs(st) < kPoleDistance)
    throw PoleError("operator coefficient pole: |sin theta^c| < 1e-3");
  return {std::cos(p.psi_c()), std::sin(p.psi_c()), 1.0 / st, std::cos(p.theta_c()) / st};
}

OperatorCoefficients a_coeffs(int k, const Trig& t) {
  OperatorCoefficients c{};
  switch (k) {
    case 1:
      c[kTheta] = t.cos_psi;
      c[kPhi] = t.sin_psi * t.csc_theta;
      c[kPsi] = -t.cot_theta * t.sin_psi;
      break;
    case 2:
      c[kTheta] = -t.sin_psi;
      c[kPhi] = t.cos_psi * t.csc_theta;
      c[kPsi] = -t.cot_theta * t.cos_psi;
      break;
    default:
      c[kPsi] = 1.0;
  }
  return c;
}

// B_k has the A_k coefficients on the imaginary-part partials
OperatorCoefficients b_coeffs(int k, const Trig& t) {
  const OperatorCoefficients a = a_coeffs(k, t);
  OperatorCoefficients c{};
  c[kTau] = a[kTheta];
  c[kEps] = a[kPhi];
  c[kVeps] = a[kPsi];
  return c;
}

OperatorCoefficients combine(cplx x, const OperatorCoefficients& a, cplx y,
                             const OperatorCoefficients& b) {
  OperatorCoefficients c{};
  for (int i = 0; i < 6; ++i) c[i] = x * a[i] + y * b[i];
  return c;
}

OperatorCoefficients xy_coeffs(bool is_x, int k, const Trig& t, const CombinationSigns& s) {
  const int sa = is_x ? s.xa[k - 1] : s.ya[k - 1];
  const int sb = is_x ? s.xb[k - 1] : s.yb[k - 1];
  return combine(0.5 * sa, a_coeffs(k, t), 0.5 * sb * kI, b_coeffs(k, t));
}

cplx partial(const ParamFunction& f, const ComplexEulerAngles& p, int axis, const FdOptions& opt) {
  const double h = opt.h;
  auto at = [&](double d) {
    ComplexEulerAngles q = p;
    component(q, axis) += d;
    return f(q);
  };
  if (opt.stencil == Stencil::Central5)
    return (-at(2 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2 * h)) / (12.0 * h);
  return (at(h) - at(-h)) / (2.0 * h);
}

}  // namespace

std::string operator_name(OperatorId op) {
  static const char* names[] = {"A1", "A2", "A3", "B1", "B2", "B3", "X1", "X2",
                                "X3", "Y1", "Y2", "Y3", "X+", "X-", "Y+", "Y-"};
  return names[static_cast<int>(op)];
}

CombinationSigns CombinationSigns::with_flip(int which) {
  if (which < 0 || which >= kFlipCount) throw DomainError("CombinationSigns: flip index out of range");
  CombinationSigns s;
  const int k = which % 3;
  switch (which / 3) {
    case 0: s.xa[k] = -s.xa[k]; break;
    case 1: s.xb[k] = -s.xb[k]; break;
    case 2: s.ya[k] = -s.ya[k]; break;
    default: s.yb[k] = -s.yb[k]; break;
  }
  return s;
}

std::string CombinationSigns::flip_name(int which) {
  static const char* parts[] = {"X-A", "X-B", "Y-A", "Y-B"};
  return std::string(parts[which / 3]) + std::to_string(which % 3 + 1);
}

OperatorCoefficients operator_coefficients(OperatorId op, const ComplexEulerAngles& p,
                                           const CombinationSigns& s) {
  const Trig t = trig_at(p);
  switch (op) {
    case OperatorId::A1: return a_coeffs(1, t);
    case OperatorId::A2: return a_coeffs(2, t);
    case OperatorId::A3: return a_coeffs(3, t);
    case OperatorId::B1: return b_coeffs(1, t);
    case OperatorId::B2: return b_coeffs(2, t);
    case OperatorId::B3: return b_coeffs(3, t);
    case OperatorId::X1: return xy_coeffs(true, 1, t, s);
    case OperatorId::X2: return xy_coeffs(true, 2, t, s);
    case OperatorId::X3: return xy_coeffs(true, 3, t, s);
    case OperatorId::Y1: return xy_coeffs(false, 1, t, s);
    case OperatorId::Y2: return xy_coeffs(false, 2, t, s);
    case OperatorId::Y3: return xy_coeffs(false, 3, t, s);
    case OperatorId::Xplus: return combine(1.0, xy_coeffs(true, 1, t, s), kI, xy_coeffs(true, 2, t, s));
    case OperatorId::Xminus: return combine(1.0, xy_coeffs(true, 1, t, s), -kI, xy_coeffs(true, 2, t, s));
    case OperatorId::Yplus: return combine(1.0, xy_coeffs(false, 1, t, s), kI, xy_coeffs(false, 2, t, s));
    case OperatorId::Yminus: return combine(1.0, xy_coeffs(false, 1, t, s), -kI, xy_coeffs(false, 2, t, s));
  }
  throw DomainError("operator_coefficients: unknown operator");
}

OperatorCoefficients explicit_ladder_coefficients(OperatorId op, const ComplexEulerAngles& p) {
  const Trig t = trig_at(p);
  const cplx i = kI;
  OperatorCoefficients c{};
  // bracket terms: d_theta, i/sin d_phi, -i cot d_psi, +-i d_tau, +-1/sin d_eps, +-cot d_veps
  auto fill = [&](cplx pre, double s_rot, double s_tau, double s_boost) {
    c[kTheta] = pre;
    c[kPhi] = pre * s_rot * i * t.csc_theta;
    c[kPsi] = -pre * s_rot * i * t.cot_theta;
    c[kTau] = pre * s_tau * i;
    c[kEps] = pre * s_boost * t.csc_theta;
    c[kVeps] = -pre * s_boost * t.cot_theta;
  };
  const cplx em = std::exp(-i * p.psi_c()) / 2.0, ep = std::exp(i * p.psi_c()) / 2.0;
  switch (op) {
    case OperatorId::Xplus: fill(em, 1, 1, -1); break;
    case OperatorId::Xminus: fill(ep, -1, 1, 1); break;
    case OperatorId::Yplus: fill(em, 1, -1, 1); break;
    case OperatorId::Yminus: fill(ep, -1, -1, -1); break;
    default: throw DomainError("explicit_ladder_coefficients: not a ladder operator");
  }
  return c;
}

cplx apply(OperatorId op, const ParamFunction& f, const ComplexEulerAngles& p,
           const FdOptions& opt) {
  if (!(opt.h >= 1e-6 && opt.h <= 1e-3)) throw DomainError("apply: step h outside [1e-6, 1e-3]");
  const OperatorCoefficients c = operator_coefficients(op, p, opt.signs);
  cplx r = 0.0;
  for (int axis = 0; axis < 6; ++axis)
    if (c[axis] != cplx(0.0)) r += c[axis] * partial(f, p, axis, opt);
  return r;
}

double commutator_residual(OperatorId op1, OperatorId op2, const ExpectedOperator& expected,
                           const ParamFunction& f, const ComplexEulerAngles& p,
                           const FdOptions& opt) {
  const ParamFunction g2 = [&](const ComplexEulerAngles& q) { return apply(op2, f, q, opt); };
  const ParamFunction g1 = [&](const ComplexEulerAngles& q) { return apply(op1, f, q, opt); };
  const cplx comm = apply(op1, g2, p, opt) - apply(op2, g1, p, opt);
  const cplx rhs = expected.op ? static_cast<double>(expected.sign) * apply(*expected.op, f, p, opt)
                               : cplx(0.0);
  return std::abs(comm - rhs);
}

const std::vector<CommutatorRelation>& rotation_boost_relations() {
  using O = OperatorId;
  static const std::vector<CommutatorRelation> rel = {
      {O::A1, O::A2, {1, O::A3}, "[A1,A2]=A3"},   {O::A2, O::A3, {1, O::A1}, "[A2,A3]=A1"},
      {O::A3, O::A1, {1, O::A2}, "[A3,A1]=A2"},   {O::B1, O::B2, {-1, O::A3}, "[B1,B2]=-A3"},
      {O::B2, O::B3, {-1, O::A1}, "[B2,B3]=-A1"}, {O::B3, O::B1, {-1, O::A2}, "[B3,B1]=-A2"},
      {O::A1, O::B1, {1, {}}, "[A1,B1]=0"},       {O::A2, O::B2, {1, {}}, "[A2,B2]=0"},
      {O::A3, O::B3, {1, {}}, "[A3,B3]=0"},       {O::A1, O::B2, {1, O::B3}, "[A1,B2]=B3"},
      {O::A1, O::B3, {-1, O::B2}, "[A1,B3]=-B2"}, {O::A2, O::B3, {1, O::B1}, "[A2,B3]=B1"},
      {O::A2, O::B1, {-1, O::B3}, "[A2,B1]=-B3"}, {O::A3, O::B1, {1, O::B2}, "[A3,B1]=B2"},
      {O::A3, O::B2, {-1, O::B1}, "[A3,B2]=-B1"},
  };
  return rel;
}

const std::vector<CommutatorRelation>& ladder_algebra_relations() {
  using O = OperatorId;
  static const std::vector<CommutatorRelation> rel = [] {
    std::vector<CommutatorRelation> r = {
        {O::X1, O::X2, {1, O::X3}, "[X1,X2]=X3"}, {O::X2, O::X3, {1, O::X1}, "[X2,X3]=X1"},
        {O::X3, O::X1, {1, O::X2}, "[X3,X1]=X2"}, {O::Y1, O::Y2, {1, O::Y3}, "[Y1,Y2]=Y3"},
        {O::Y2, O::Y3, {1, O::Y1}, "[Y2,Y3]=Y1"}, {O::Y3, O::Y1, {1, O::Y2}, "[Y3,Y1]=Y2"},
    };
    const O xs[] = {O::X1, O::X2, O::X3}, ys[] = {O::Y1, O::Y2, O::Y3};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        r.push_back({xs[a], ys[b], {1, {}},
                     "[X" + std::to_string(a + 1) + ",Y" + std::to_string(b + 1) + "]=0"});
    return r;
  }();
  return rel;
}

ParamFunction m_family(HalfInt l, HalfInt m, HalfInt n) {
  return [l, m, n](const ComplexEulerAngles& a) { return m_function(l, m, n, a); };
}

double ladder_residual(HalfInt l, HalfInt m, HalfInt n, OperatorId which,
                       const ComplexEulerAngles& p, const FdOptions& opt) {
  if (!is_projection(l, m) || !is_projection(l, n))
    throw DomainError("ladder_residual: indices out of range");
  const cplx got = apply(which, m_family(l, m, n), p, opt);
  cplx expected = 0.0;
  const HalfInt one(1);
  switch (which) {
    case OperatorId::Xplus:
      if (n < l) expected = kI * ladder_alpha(l, n + one) * m_function(l, m, n + one, p);
      break;
    case OperatorId::Xminus:
      if (n > -l) expected = kI * ladder_alpha(l, n) * m_function(l, m, n - one, p);
      break;
    case OperatorId::X3:
      expected = -kI * n.value() * m_function(l, m, n, p);
      break;
    case OperatorId::Yplus:
    case OperatorId::Yminus:
    case OperatorId::Y3:
      break;
    default:
      throw DomainError("ladder_residual: not a ladder operator");
  }
  return std::abs(got - expected);
}

std::string recurrence_name(RecurrenceId id) {
  static const char* names[] = {"dotted.lower_n", "dotted.raise_n", "dotted.lower_m",
                                "dotted.raise_m", "dotted.three_term_n", "dotted.three_term_m",
                                "lower_n", "raise_n", "lower_m", "raise_m", "three_term_n",
                                "three_term_m"};
  return names[static_cast<int>(id)];
}

double recurrence_residual(RecurrenceId id, HalfInt l, HalfInt m, HalfInt n, double theta,
                           double tau, RecurrenceForm form) {
  if (!is_projection(l, m) || !is_projection(l, n))
    throw DomainError("recurrence_residual: indices out of range");
  const int idx = static_cast<int>(id);
  const bool dotted = idx <= static_cast<int>(RecurrenceId::DottedThreeTermM);
  const cplx thetac(theta, -tau);
  if (std::abs(std::sin(thetac)) < kPoleDistance)
    throw PoleError("recurrence_residual: |sin theta^c| < 1e-3");

  auto value = [&](HalfInt a, HalfInt b) -> cplx {
    if (!is_projection(l, a) || !is_projection(l, b)) return 0.0;
    return dotted ? dotted_z_function(l, a, b, theta, tau) : z_function(l, a, b, theta, tau);
  };
  const ZJet z = dotted ? dotted_z_jet(l, m, n, theta, tau) : z_jet(l, m, n, theta, tau);
  const HalfInt one(1);
  const double mv = m.value(), nv = n.value();

  // K as printed uses theta^c; the corrected dotted form evaluates it at theta + i tau
  const cplx kth = (form == RecurrenceForm::Corrected && dotted) ? std::conj(thetac) : thetac;
  const cplx K = 2.0 * (mv - nv * std::cos(kth)) / std::sin(kth);
  const cplx Kt = 2.0 * (nv - mv * std::cos(kth)) / std::sin(kth);

  // derivative combination and i-factor on K
  cplx deriv, kfac;
  if (form == RecurrenceForm::Printed) {
    deriv = dotted ? z.d_theta + kI * z.d_tau : z.d_theta - kI * z.d_tau;
    kfac = 1.0;
  } else {
    deriv = dotted ? -kI * (z.d_theta - kI * z.d_tau) : -kI * (z.d_theta + kI * z.d_tau);
    kfac = dotted ? -kI : kI;
  }
  // printed sign of the K term in the n-/m- lowering relations
  const double low = dotted ? -1.0 : 1.0;

  cplx lhs, rhs;
  switch (id) {
    case RecurrenceId::DottedLowerN:
    case RecurrenceId::LowerN:
      lhs = deriv + low * kfac * K * z.value;
      rhs = 2.0 * (n > -l ? ladder_alpha(l, n) : 0.0) * value(m, n - one);
      break;
    case RecurrenceId::DottedRaiseN:
    case RecurrenceId::RaiseN:
      lhs = deriv - low * kfac * K * z.value;
      rhs = 2.0 * ladder_alpha(l, n + one) * value(m, n + one);
      break;
    case RecurrenceId::DottedLowerM:
    case RecurrenceId::LowerM:
      lhs = deriv + low * kfac * Kt * z.value;
      rhs = 2.0 * (m > -l ? ladder_alpha(l, m) : 0.0) * value(m - one, n);
      break;
    case RecurrenceId::DottedRaiseM:
    case RecurrenceId::RaiseM:
      lhs = deriv - low * kfac * Kt * z.value;
      rhs = 2.0 * ladder_alpha(l, m + one) * value(m + one, n);
      break;
    case RecurrenceId::DottedThreeTermN:
      lhs = ladder_alpha(l, n + one) * value(m, n + one) -
            (n > -l ? ladder_alpha(l, n) : 0.0) * value(m, n - one);
      rhs = kfac * K * z.value;
      break;
    case RecurrenceId::DottedThreeTermM:
      lhs = ladder_alpha(l, m + one) * value(m + one, n) -
            (m > -l ? ladder_alpha(l, m) : 0.0) * value(m - one, n);
      rhs = kfac * Kt * z.value;
      break;
    case RecurrenceId::ThreeTermN:
      lhs = (n > -l ? ladder_alpha(l, n) : 0.0) * value(m, n - one) -
            ladder_alpha(l, n + one) * value(m, n + one);
      rhs = kfac * K * z.value;
      break;
    case RecurrenceId::ThreeTermM:
      lhs = (m > -l ? ladder_alpha(l, m) : 0.0) * value(m - one, n) -
            ladder_alpha(l, m + one) * value(m + one, n);
      rhs = kfac * Kt * z.value;
      break;
  }
  return std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
}

}  // namespace lh
