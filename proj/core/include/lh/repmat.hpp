#pragma once

#include "lh/euler.hpp"
#include "lh/hyper.hpp"
#include "lh/matrix.hpp"

namespace lh {

RepMatrix rep_matrix(HalfInt l, const ComplexEulerAngles& a,
                     ZEvalMethod method = ZEvalMethod::DoubleSum);

// e^{-i(m phi + n psi)} times the j-sum of the SU(2) matrix element
cplx su2_matrix_element(HalfInt l, HalfInt m, HalfInt n, double phi, double theta, double psi);
RepMatrix su2_matrix(HalfInt l, double phi, double theta, double psi);

// min over s = +-1 of ||T(compose(a1,a2)) - s T(a1) T(a2)|| / (1 + ||T(a1) T(a2)||)
double homomorphism_residual(HalfInt l, const ComplexEulerAngles& a1,
                             const ComplexEulerAngles& a2);

// ||T^dagger T - I||
double unitarity_defect(const RepMatrix& t);

}  // namespace lh
