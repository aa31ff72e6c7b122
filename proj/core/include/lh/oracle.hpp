#pragma once

#include <vector>

#include "lh/euler.hpp"
#include "lh/matrix.hpp"

namespace lh {

// Homogeneous polynomial of bidegree (k, r) in (z0, z1 ; zb0, zb1).
// coeff(p, pb) multiplies z0^p z1^(k-p) zb0^pb zb1^(r-pb).
class PolyState {
 public:
  PolyState(int k, int r);
  static PolyState monomial(int k, int r, int p, int pb, cplx c = 1.0);

  int k() const { return k_; }
  int r() const { return r_; }
  cplx& coeff(int p, int pb) { return c_[p * (r_ + 1) + pb]; }
  const cplx& coeff(int p, int pb) const { return c_[p * (r_ + 1) + pb]; }

 private:
  int k_, r_;
  std::vector<cplx> c_;
};

// z0 -> a11 z0 + a21 z1, z1 -> a12 z0 + a22 z1; barred variables with conj(g).
PolyState act(const GroupElement& g, const PolyState& state);

// Matrix of act on Sym(2l, 0) in the normalized basis z0^(l-n) z1^(l+n) / sqrt((l-n)!(l+n)!).
RepMatrix oracle_matrix(HalfInt l, const GroupElement& g);
// Same on Sym(0, 2l): the conjugate representation.
RepMatrix oracle_matrix_dotted(HalfInt l, const GroupElement& g);
// Sym(2l, 2lp) with composite index (n, nb) -> n_index * (2lp+1) + nb_index.
CMatrix oracle_matrix_bidegree(HalfInt l, HalfInt lp, const GroupElement& g);

// C(n, k) exactly; n <= 62
unsigned long long binomial(int n, int k);

}  // namespace lh
