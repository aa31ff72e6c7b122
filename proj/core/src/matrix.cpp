#include "lh/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace lh {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  if (o.n_ != n_) throw std::invalid_argument("CMatrix: size mismatch");
  CMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const cplx aik = (*this)(i, k);
      for (std::size_t j = 0; j < n_; ++j) r(i, j) += aik * o(k, j);
    }
  return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  if (o.n_ != n_) throw std::invalid_argument("CMatrix: size mismatch");
  CMatrix r(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

CMatrix CMatrix::operator*(cplx s) const {
  CMatrix r(*this);
  for (auto& x : r.a_) x *= s;
  return r;
}

CMatrix CMatrix::adjoint() const {
  CMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : a_) m = std::max(m, std::abs(x));
  return m;
}

cplx CMatrix::determinant() const {
  // LU with partial pivoting
  CMatrix w(*this);
  cplx det = 1.0;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n_; ++r)
      if (std::abs(w(r, c)) > std::abs(w(p, c))) p = r;
    if (w(p, c) == cplx(0.0)) return 0.0;
    if (p != c) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(w(p, j), w(c, j));
      det = -det;
    }
    det *= w(c, c);
    for (std::size_t r = c + 1; r < n_; ++r) {
      const cplx f = w(r, c) / w(c, c);
      for (std::size_t j = c; j < n_; ++j) w(r, j) -= f * w(c, j);
    }
  }
  return det;
}

double relative_deviation(const CMatrix& a, const CMatrix& b) {
  return (a - b).max_abs() / (1.0 + b.max_abs());
}

}  // namespace lh
