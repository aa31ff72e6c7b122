#pragma once

#include <complex>

#include "lh/matrix.hpp"

namespace lh {

// phi^c = phi - i eps, theta^c = theta - i tau, psi^c = psi - i veps
struct ComplexEulerAngles {
  double phi = 0.0;
  double eps = 0.0;
  double theta = 0.0;
  double tau = 0.0;
  double psi = 0.0;
  double veps = 0.0;

  cplx phi_c() const { return {phi, -eps}; }
  cplx theta_c() const { return {theta, -tau}; }
  cplx psi_c() const { return {psi, -veps}; }

  static ComplexEulerAngles from_complex(cplx phic, cplx thetac, cplx psic) {
    return {phic.real(), -phic.imag(), thetac.real(), -thetac.imag(), psic.real(), -psic.imag()};
  }
  bool operator==(const ComplexEulerAngles&) const = default;
};

struct GroupElement {
  cplx a11{1.0}, a12{0.0}, a21{0.0}, a22{1.0};

  cplx det() const { return a11 * a22 - a12 * a21; }
  GroupElement operator*(const GroupElement& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
  }
  GroupElement operator-() const { return {-a11, -a12, -a21, -a22}; }
  GroupElement conj() const {
    return {std::conj(a11), std::conj(a12), std::conj(a21), std::conj(a22)};
  }
  // 2x2 matrix in the same index order as RepMatrix for l = 1/2
  CMatrix as_matrix() const;
};

// max-abs-entry distance
double distance(const GroupElement& a, const GroupElement& b);

GroupElement to_matrix(const ComplexEulerAngles& a);
// the same element as the six-factor product a3(phi) b3(eps) a1(theta) b1(tau) a3(psi) b3(veps)
GroupElement to_matrix_factored(const ComplexEulerAngles& a);

struct AngleRecovery {
  ComplexEulerAngles angles;
  int sign = 1;         // to_matrix(angles) == sign * g
  bool unique = true;   // false on the degenerate set, where psi is fixed to 0
};

AngleRecovery from_matrix(const GroupElement& g);

struct Composition {
  ComplexEulerAngles angles;
  bool fallback = false;  // product matrix + from_matrix used instead of the angle formulas
};

ComplexEulerAngles compose(const ComplexEulerAngles& a1, const ComplexEulerAngles& a2);
Composition compose_detailed(const ComplexEulerAngles& a1, const ComplexEulerAngles& a2);

// Angles of g(phi1,theta1,psi1) * a3(phi2) a2(theta2) a3(psi2).
// Printed form omits the factor i in the half-angle numerator (kept for the discrepancy test).
enum class Omega2Form { Corrected, Printed };
ComplexEulerAngles compose_omega2(const ComplexEulerAngles& left, cplx phi2c, cplx theta2c,
                                  cplx psi2c, Omega2Form form = Omega2Form::Corrected);

enum class Subgroup { a1, a2, a3, b1, b2, b3, w1, w2, w3 };

// a/b kinds take real t (imag part must be zero); w kinds take complex t^c.
GroupElement subgroup_matrix(Subgroup kind, cplx t);

inline constexpr double kComposeDegenerate = 1e-8;

}  // namespace lh
