#include "lh/oracle.hpp"

#include <cmath>

#include "lh/errors.hpp"
#include "lh/specfun.hpp"

namespace lh {

namespace {

cplx ipow(cplx x, int k) {
  cplx r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// rows p = 0..deg: expansion of (x z0 + y z1)^p (u z0 + v z1)^(deg-p) in powers z0^a
std::vector<std::vector<cplx>> expansion(int deg, cplx x, cplx y, cplx u, cplx v) {
  std::vector<std::vector<cplx>> out(deg + 1, std::vector<cplx>(deg + 1));
  for (int p = 0; p <= deg; ++p) {
    const int q = deg - p;
    for (int i = 0; i <= p; ++i) {
      const cplx fi = static_cast<double>(binomial(p, i)) * ipow(x, i) * ipow(y, p - i);
      for (int j = 0; j <= q; ++j)
        out[p][i + j] += fi * (static_cast<double>(binomial(q, j)) * ipow(u, j) * ipow(v, q - j));
    }
  }
  return out;
}

double basis_norm(int p, int q) { return std::sqrt(factorial(p) * factorial(q)); }

}  // namespace

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (n > 62) throw DomainError("binomial: n too large for exact 64-bit arithmetic");
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / i;
  return r;
}

PolyState::PolyState(int k, int r) : k_(k), r_(r), c_((k + 1) * (r + 1)) {
  if (k < 0 || r < 0) throw DomainError("PolyState: negative degree");
}

PolyState PolyState::monomial(int k, int r, int p, int pb, cplx c) {
  PolyState s(k, r);
  s.coeff(p, pb) = c;
  return s;
}

PolyState act(const GroupElement& g, const PolyState& state) {
  const int k = state.k(), r = state.r();
  const auto U = expansion(k, g.a11, g.a21, g.a12, g.a22);
  const GroupElement h = g.conj();
  const auto B = expansion(r, h.a11, h.a21, h.a12, h.a22);
  PolyState out(k, r);
  for (int p = 0; p <= k; ++p)
    for (int pb = 0; pb <= r; ++pb) {
      const cplx c = state.coeff(p, pb);
      if (c == cplx(0.0)) continue;
      for (int a = 0; a <= k; ++a) {
        const cplx ca = c * U[p][a];
        for (int ab = 0; ab <= r; ++ab) out.coeff(a, ab) += ca * B[pb][ab];
      }
    }
  return out;
}

CMatrix oracle_matrix_bidegree(HalfInt l, HalfInt lp, const GroupElement& g) {
  const int k = l.twice(), r = lp.twice();
  const int nb = r + 1;
  CMatrix t(static_cast<std::size_t>((k + 1) * (r + 1)));
  // projection index i <-> z0 exponent k - i
  for (int col = 0; col <= k; ++col)
    for (int colb = 0; colb <= r; ++colb) {
      const int p = k - col, pb = r - colb;
      const PolyState img = act(g, PolyState::monomial(k, r, p, pb));
      const double nin = basis_norm(p, k - p) * basis_norm(pb, r - pb);
      for (int row = 0; row <= k; ++row)
        for (int rowb = 0; rowb <= r; ++rowb) {
          const int a = k - row, ab = r - rowb;
          const double nout = basis_norm(a, k - a) * basis_norm(ab, r - ab);
          t(row * nb + rowb, col * nb + colb) = img.coeff(a, ab) * nout / nin;
        }
    }
  return t;
}

RepMatrix oracle_matrix(HalfInt l, const GroupElement& g) {
  RepMatrix t(l);
  t.entries = oracle_matrix_bidegree(l, HalfInt(0), g);
  return t;
}

RepMatrix oracle_matrix_dotted(HalfInt l, const GroupElement& g) {
  RepMatrix t(l);
  t.entries = oracle_matrix_bidegree(HalfInt(0), l, g);
  return t;
}

}  // namespace lh
