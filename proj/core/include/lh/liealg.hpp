#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lh/euler.hpp"
#include "lh/halfint.hpp"
#include "lh/matrix.hpp"

namespace lh {

// f(phi, eps, theta, tau, psi, veps)
using ParamFunction = std::function<cplx(const ComplexEulerAngles&)>;

enum class OperatorId {
  A1, A2, A3, B1, B2, B3,
  X1, X2, X3, Y1, Y2, Y3,
  Xplus, Xminus, Yplus, Yminus
};

std::string operator_name(OperatorId op);

// Signs in X_k = (xa A_k + xb i B_k)/2 and Y_k = (ya A_k + yb i B_k)/2.
// Defaults are the standard combination; flips exist for the negative control.
struct CombinationSigns {
  std::array<int, 3> xa{1, 1, 1}, xb{1, 1, 1}, ya{1, 1, 1}, yb{-1, -1, -1};

  static constexpr int kFlipCount = 12;
  // flip 0..11: (X|Y) x (A|B) x k
  static CombinationSigns with_flip(int which);
  static std::string flip_name(int which);
  bool operator==(const CombinationSigns&) const = default;
};

// coefficients of d/dphi, d/deps, d/dtheta, d/dtau, d/dpsi, d/dveps
using OperatorCoefficients = std::array<cplx, 6>;

OperatorCoefficients operator_coefficients(OperatorId op, const ComplexEulerAngles& p,
                                           const CombinationSigns& signs = {});
// X+-, Y+- written out term by term (the expanded ladder forms), for comparison.
OperatorCoefficients explicit_ladder_coefficients(OperatorId op, const ComplexEulerAngles& p);

enum class Stencil { Central3, Central5 };

struct FdOptions {
  double h = 1e-3;
  Stencil stencil = Stencil::Central3;
  CombinationSigns signs{};
};

// First-order operator with finite-difference partials; coefficients exact at p.
cplx apply(OperatorId op, const ParamFunction& f, const ComplexEulerAngles& p,
           const FdOptions& opt = {});

struct ExpectedOperator {
  int sign = 1;
  std::optional<OperatorId> op;  // empty: the commutator vanishes
};

// |[op1, op2] f(p) - expected f(p)| with nested differences
double commutator_residual(OperatorId op1, OperatorId op2, const ExpectedOperator& expected,
                           const ParamFunction& f, const ComplexEulerAngles& p,
                           const FdOptions& opt = {});

struct CommutatorRelation {
  OperatorId a, b;
  ExpectedOperator expected;
  std::string name;
};
const std::vector<CommutatorRelation>& rotation_boost_relations();
const std::vector<CommutatorRelation>& ladder_algebra_relations();

// f = M^l_{mn}
ParamFunction m_family(HalfInt l, HalfInt m, HalfInt n);

// Ladder actions on M^l_{mn}:
//   X+ M_{mn} = i a_{n+1} M_{m,n+1},  X- M_{mn} = i a_n M_{m,n-1},  X3 M_{mn} = -i n M_{mn},
//   Y+, Y-, Y3 annihilate M.
// Returns |apply(which, M_{mn}) - expected|.
double ladder_residual(HalfInt l, HalfInt m, HalfInt n, OperatorId which,
                       const ComplexEulerAngles& p, const FdOptions& opt = {});

// Dotted family first, then undotted. Lower/Raise: first-order relations shifting n (or m);
// ThreeTerm: the derivative-free combinations.
enum class RecurrenceId {
  DottedLowerN, DottedRaiseN, DottedLowerM, DottedRaiseM, DottedThreeTermN, DottedThreeTermM,
  LowerN, RaiseN, LowerM, RaiseM, ThreeTermN, ThreeTermM
};
inline constexpr int kRecurrenceCount = 12;
std::string recurrence_name(RecurrenceId id);

// Printed: coefficients exactly as they stand (fail by O(1)).
// Corrected: the same relations with the factors of i restored.
enum class RecurrenceForm { Corrected, Printed };

// |LHS - RHS| / (1 + |RHS|) with analytic theta/tau derivatives.

double recurrence_residual(RecurrenceId id, HalfInt l, HalfInt m, HalfInt n, double theta,
                           double tau, RecurrenceForm form = RecurrenceForm::Corrected);

inline constexpr double kPoleDistance = 1e-3;

}  // namespace lh
