#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lh/euler.hpp"
#include "lh/halfint.hpp"

namespace lh {

using Rational = boost::multiprecision::cpp_rational;

// C(l1, l2, l; j, k, m), m = j + k
struct CGIndex {
  HalfInt l1, l2, l;
  HalfInt j, k, m;
};

// triangle, projection ranges, integrality of l1+l2+l
bool is_valid(const CGIndex& idx);
// is_valid and m == j + k
bool selection_rule(const CGIndex& idx);

// Gamma-product times regularized 3F2(...;1); 0 when the selection rule fails.
double clebsch_gordan(const CGIndex& idx);
// Independent finite sum (Racah form), used as a cross-check.
double clebsch_gordan_racah(const CGIndex& idx);

// C = sign * sqrt(square), exact
struct ExactCG {
  int sign = 0;
  Rational square{0};
  std::string str() const;  // "0", "1", "-1", "±sqrt(p/q)"
  double value() const;
};
ExactCG clebsch_gordan_exact(const CGIndex& idx);

// product of the two SU(2) factors
double cg_sl2c(const CGIndex& undotted, const CGIndex& dotted);

// max |sum_{j,k} C(l1 l2 l; j k m) C(l1 l2 l'; j k m') - delta| over admissible l, l', m, m'
double cg_orthogonality_residual(HalfInt l1, HalfInt l2);

// Printed coefficient tables as exact rationals, indexed [row][col].
// l1 = 1: rows mu = -1, 0, 1 (first row mu = -1); columns L = l+1, l, l-1.
// l1 = 1/2: rows mu = -1/2, 1/2; columns L = l+1/2, l-1/2.
std::vector<std::vector<Rational>> printed_bbar_l1(HalfInt l, HalfInt m);
std::vector<std::vector<Rational>> printed_bbar_half(HalfInt l, HalfInt m);
// The same tables built from squares of clebsch_gordan_exact; zero where L is inadmissible.
// The printed formulas only hold on admissible entries.
std::vector<std::vector<Rational>> cg_squared_l1(HalfInt l, HalfInt m);
std::vector<std::vector<Rational>> cg_squared_half(HalfInt l, HalfInt m);
// entry (row, col) of the l1 = 1 (half = false) or l1 = 1/2 table has a valid CG index
bool bbar_admissible(bool half, HalfInt l, HalfInt m, int row, int col);

enum class CouplingKind { NineL1, FourHalf };
// Corrected: CG amplitudes on the left, the T_1 (T_1/2) element M^1_{mu mu'} on the right.
// Printed: squared table entries on the left, printed prefactors on the right.
enum class CouplingForm { Corrected, Printed };

struct CouplingResult {
  bool skipped = false;  // shifted indices out of range
  double residual = 0.0;
  std::string status;
};

// row: 1..9 (NineL1) or 1..4 (FourHalf); j, m are projections of l + 1 (l + 1/2).
// Weights L where j or m is out of range drop out of the left side.
CouplingResult coupling_recurrence_residual(CouplingKind kind, int row, HalfInt l, HalfInt j,
                                            HalfInt m, const ComplexEulerAngles& a,
                                            CouplingForm form = CouplingForm::Corrected);

}  // namespace lh
