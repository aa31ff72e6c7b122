#pragma once

#include <vector>

#include "lh/halfint.hpp"
#include "lh/matrix.hpp"

namespace lh {

// Gamma(k) = (k-1)! for integer k >= 1; exact up to k = 21.
double gamma_int(int k);
// n! for n >= 0
inline double factorial(int n) { return gamma_int(n + 1); }

// Terms of a terminating series and their compensated sum.
struct TermSum {
  std::vector<cplx> terms;
  cplx value{0.0};
};

// Neumaier summation of complex terms
cplx compensated_sum(const std::vector<cplx>& terms);

TermSum hyp2f1_terms(double a, double b, double c, cplx z);
cplx hyp2f1_terminating(double a, double b, double c, cplx z);

// 3F2(a1,a2,a3; b1,b2; 1), one numerator parameter a nonpositive integer.
double hyp3f2_unit(double a1, double a2, double a3, double b1, double b2);
// 3F2(...; 1) / Gamma(b2), continued to nonpositive integer b2 (terms with 1/Gamma(pole) vanish).
double hyp3f2_unit_regularized(double a1, double a2, double a3, double b1, double b2);

// SU(2) factor of Z: the j-sum with its i^{m-n} phase, in sin/cos power form.
cplx spherical_p(HalfInt l, HalfInt m, HalfInt n, double theta);
// Boost factor: sqrt(...) cosh^{2l} tanh^{m-n} s-sum, indices in the order printed.
double jacobi_p(HalfInt l, HalfInt m, HalfInt n, double tau);

struct ComplexJet {
  cplx value{0.0};
  cplx derivative{0.0};
};
struct RealJet {
  double value = 0.0;
  double derivative = 0.0;
};

// value and d/dtheta, termwise
ComplexJet spherical_p_jet(HalfInt l, HalfInt m, HalfInt n, double theta);
// value and d/dtau, termwise
RealJet jacobi_p_jet(HalfInt l, HalfInt m, HalfInt n, double tau);

// Hypergeometric forms. Derived parameters (m-l, -l-n) come from the term ratio of the sum;
// Printed uses (m-l+1, 1-l-n) and is kept only to demonstrate the discrepancy.
enum class HypParams { Derived, Printed };
cplx spherical_p_hyp(HalfInt l, HalfInt m, HalfInt n, double theta,
                     HypParams params = HypParams::Derived);
double jacobi_p_hyp(HalfInt l, HalfInt m, HalfInt n, double tau,
                    HypParams params = HypParams::Derived);

}  // namespace lh
