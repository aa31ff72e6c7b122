#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "lh/halfint.hpp"

namespace lh {

using cplx = std::complex<double>;
inline constexpr cplx kI{0.0, 1.0};

// Dense square complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t n) : n_(n), a_(n * n) {}

  static CMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  cplx& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  CMatrix operator*(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix operator*(cplx s) const;
  CMatrix adjoint() const;

  // max |a_rc|
  double max_abs() const;
  cplx determinant() const;

 private:
  std::size_t n_ = 0;
  std::vector<cplx> a_;
};

// ||a - b|| / (1 + ||b||) in the max-abs-entry norm
double relative_deviation(const CMatrix& a, const CMatrix& b);

// T_l(g) with rows m and columns n in ascending projection order.
struct RepMatrix {
  HalfInt l;
  CMatrix entries;

  RepMatrix() = default;
  explicit RepMatrix(HalfInt weight) : l(weight), entries(static_cast<std::size_t>(dim(weight))) {}

  cplx& at(HalfInt m, HalfInt n) { return entries(index_of(l, m), index_of(l, n)); }
  const cplx& at(HalfInt m, HalfInt n) const { return entries(index_of(l, m), index_of(l, n)); }
};

}  // namespace lh
