#pragma once

#include "lh/euler.hpp"
#include "lh/halfint.hpp"
#include "lh/matrix.hpp"

namespace lh {

enum class ZEvalMethod { DoubleSum, HypergeometricProduct, Factorized };

// Z^l_{mn}(theta, tau). DoubleSum is the defining triple sum; the others are cross-checks.
cplx z_function(HalfInt l, HalfInt m, HalfInt n, double theta, double tau,
                ZEvalMethod method = ZEvalMethod::DoubleSum);

struct ZJet {
  cplx value{0.0};
  cplx d_theta{0.0};
  cplx d_tau{0.0};
};

// Z with analytic partial derivatives (termwise differentiation).
ZJet z_jet(HalfInt l, HalfInt m, HalfInt n, double theta, double tau);

// Dotted family: Z(theta, -tau), i.e. theta^c replaced by theta + i tau.
cplx dotted_z_function(HalfInt l, HalfInt m, HalfInt n, double theta, double tau);
ZJet dotted_z_jet(HalfInt l, HalfInt m, HalfInt n, double theta, double tau);

// e^{-m(eps + i phi)} Z^l_{mn}(theta, tau) e^{-n(veps + i psi)}
cplx m_function(HalfInt l, HalfInt m, HalfInt n, const ComplexEulerAngles& a,
                ZEvalMethod method = ZEvalMethod::DoubleSum);

struct GenHypersphericalPoint {
  HalfInt l, m, n;
  ComplexEulerAngles angles;
  cplx value{0.0};
};
GenHypersphericalPoint evaluate_point(HalfInt l, HalfInt m, HalfInt n, const ComplexEulerAngles& a);

// Closed-form T_0, T_1/2, T_1 at (theta, tau); other weights are unsupported.
RepMatrix explicit_t_matrix(HalfInt l, double theta, double tau);

// Addition theorem for Z.
//   Special: g1 = (0,0,theta1,tau1,0,0), g2 = (phi2,eps2,theta2,tau2,0,0); other angles ignored.
//   General: both factors arbitrary, exponents rederived from T(g1 g2) = T(g1) T(g2).
//   GeneralPrinted: the exponent bookkeeping as printed (reported, expected to fail).
enum class AdditionForm { Special, General, GeneralPrinted };
double addition_theorem_residual(HalfInt l, HalfInt m, HalfInt n, const ComplexEulerAngles& a1,
                                 const ComplexEulerAngles& a2, AdditionForm form);

}  // namespace lh
