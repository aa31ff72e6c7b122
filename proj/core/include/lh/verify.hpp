#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lh/euler.hpp"
#include "lh/liealg.hpp"

namespace lh {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double uniform();                   // [0, 1), 53 bits
  double uniform(double lo, double hi);
  int below(int n);                   // [0, n)

 private:
  std::uint64_t state_;
};

// theta in (0.2, pi - 0.2), |tau| <= tau_max, other angles in (0.1, 1.5)
ComplexEulerAngles sample_safe_box(SplitMix64& rng, double tau_max = 2.0);

// Tolerances before scaling by LH_TOL_SCALE.
namespace tol {
inline constexpr double kOracle = 1e-10;
inline constexpr double kMethods = 1e-10;
inline constexpr double kClosedForm = 1e-12;
inline constexpr double kHomomorphism = 1e-10;
inline constexpr double kHomomorphismSu2 = 1e-12;
inline constexpr double kUnitarity = 1e-12;
inline constexpr double kSu2Reduction = 1e-13;
inline constexpr double kCommutator = 1e-4;
inline constexpr double kCommutatorStep = 1e-3;
inline constexpr double kLadder = 1e-5;
inline constexpr double kLadderStep = 1e-4;
inline constexpr double kExplicitOperator = 1e-12;
inline constexpr double kRecurrence = 1e-9;
inline constexpr double kDerivative = 1e-6;
inline constexpr double kDerivativeStep = 1e-4;
inline constexpr double kOrthogonality = 1e-12;
inline constexpr double kCgForms = 1e-12;
inline constexpr double kCoupling = 1e-8;
}  // namespace tol

// LH_TOL_SCALE, default 1; throws DomainError if set but not a positive number
double tol_scale_from_env();

struct IdentityResult {
  std::string suite;
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string worst_point;
  long long samples = 0;
  bool informational = false;  // reported only; never fails the suite
  bool passed() const { return informational || max_residual <= tolerance; }
};

struct SuiteReport {
  std::vector<IdentityResult> results;
  bool passed() const;
  void append(const SuiteReport& other);
};

enum class Suite { Addition, Commutators, Ladders, Recurrences, Cg, Oracle, All };
Suite parse_suite(const std::string& name);  // throws DomainError
std::string suite_name(Suite s);

struct VerifyOptions {
  std::uint64_t seed = 1;
  int trials = 20;
  double tol_scale = 1.0;
  int max_twice_l = -1;  // per-suite default when negative
  CombinationSigns signs{};
  bool report_printed = true;  // add informational rows for the printed variants
};

SuiteReport run_suite(Suite s, const VerifyOptions& opt);

// "PASS oracle rep_vs_polynomial max=... tol=... n=..." ; INFO rows likewise
std::string format_result(const IdentityResult& r);

}  // namespace lh
