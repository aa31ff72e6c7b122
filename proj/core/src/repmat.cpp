#include "lh/repmat.hpp"

#include <algorithm>
#include <cmath>

#include "lh/errors.hpp"
#include "lh/specfun.hpp"

namespace lh {

RepMatrix rep_matrix(HalfInt l, const ComplexEulerAngles& a, ZEvalMethod method) {
  if (l.twice() < 0) throw DomainError("rep_matrix: negative weight");
  RepMatrix t(l);
  const auto ps = projections(l);
  for (std::size_t r = 0; r < ps.size(); ++r)
    for (std::size_t c = 0; c < ps.size(); ++c) t.entries(r, c) = m_function(l, ps[r], ps[c], a, method);
  return t;
}

cplx su2_matrix_element(HalfInt l, HalfInt m, HalfInt n, double phi, double theta, double psi) {
  return std::exp(-kI * (m.value() * phi + n.value() * psi)) * spherical_p(l, m, n, theta);
}

RepMatrix su2_matrix(HalfInt l, double phi, double theta, double psi) {
  RepMatrix t(l);
  const auto ps = projections(l);
  for (std::size_t r = 0; r < ps.size(); ++r)
    for (std::size_t c = 0; c < ps.size(); ++c)
      t.entries(r, c) = su2_matrix_element(l, ps[r], ps[c], phi, theta, psi);
  return t;
}

double homomorphism_residual(HalfInt l, const ComplexEulerAngles& a1,
                             const ComplexEulerAngles& a2) {
  const CMatrix lhs = rep_matrix(l, compose(a1, a2)).entries;
  const CMatrix prod = rep_matrix(l, a1).entries * rep_matrix(l, a2).entries;
  const double plus = (lhs - prod).max_abs();
  const double minus = (lhs - prod * cplx(-1.0)).max_abs();
  return std::min(plus, minus) / (1.0 + prod.max_abs());
}

double unitarity_defect(const RepMatrix& t) {
  const CMatrix& a = t.entries;
  return (a.adjoint() * a - CMatrix::identity(a.size())).max_abs();
}

}  // namespace lh
