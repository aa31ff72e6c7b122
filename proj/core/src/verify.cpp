#include "lh/verify.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

#include "lh/cg.hpp"
#include "lh/errors.hpp"
#include "lh/hyper.hpp"
#include "lh/io.hpp"
#include "lh/oracle.hpp"
#include "lh/repmat.hpp"
#include "lh/specfun.hpp"

namespace lh {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int SplitMix64::below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

ComplexEulerAngles sample_safe_box(SplitMix64& rng, double tau_max) {
  ComplexEulerAngles a;
  a.phi = rng.uniform(0.1, 1.5);
  a.eps = rng.uniform(0.1, 1.5);
  a.theta = rng.uniform(0.2, std::numbers::pi - 0.2);
  a.tau = rng.uniform(-tau_max, tau_max);
  a.psi = rng.uniform(0.1, 1.5);
  a.veps = rng.uniform(0.1, 1.5);
  return a;
}

double tol_scale_from_env() {
  const char* v = std::getenv("LH_TOL_SCALE");
  if (!v || !*v) return 1.0;
  char* end = nullptr;
  const double s = std::strtod(v, &end);
  if (*end != '\0' || !(s > 0.0) || !std::isfinite(s))
    throw DomainError(std::string("LH_TOL_SCALE must be a positive number, got '") + v + "'");
  return s;
}

bool SuiteReport::passed() const {
  for (const auto& r : results)
    if (!r.passed()) return false;
  return true;
}

void SuiteReport::append(const SuiteReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

Suite parse_suite(const std::string& name) {
  if (name == "addition") return Suite::Addition;
  if (name == "commutators") return Suite::Commutators;
  if (name == "ladders") return Suite::Ladders;
  if (name == "recurrences") return Suite::Recurrences;
  if (name == "cg") return Suite::Cg;
  if (name == "oracle") return Suite::Oracle;
  if (name == "all") return Suite::All;
  throw DomainError("unknown suite '" + name + "'");
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Addition: return "addition";
    case Suite::Commutators: return "commutators";
    case Suite::Ladders: return "ladders";
    case Suite::Recurrences: return "recurrences";
    case Suite::Cg: return "cg";
    case Suite::Oracle: return "oracle";
    case Suite::All: return "all";
  }
  return "?";
}

std::string format_result(const IdentityResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, " max=%.3e tol=%.1e n=%lld", r.max_residual, r.tolerance, r.samples);
  std::string tag = r.informational ? "INFO" : (r.passed() ? "PASS" : "FAIL");
  std::string line = tag + " " + r.suite + " " + r.name + buf;
  if (!r.passed() || r.informational) line += " at " + r.worst_point;
  return line;
}

namespace {

// max-residual accumulator; NaN counts as a breach
class Tracker {
 public:
  Tracker(std::string suite, std::string name, double tolerance, bool info = false) {
    r_.suite = std::move(suite);
    r_.name = std::move(name);
    r_.tolerance = tolerance;
    r_.informational = info;
  }
  template <class Describe>
  void add(double residual, Describe&& describe) {
    ++r_.samples;
    if (std::isnan(residual)) residual = INFINITY;
    if (r_.samples == 1 || residual > r_.max_residual) {
      r_.max_residual = residual;
      r_.worst_point = describe();
    }
  }
  IdentityResult result() const { return r_; }

 private:
  IdentityResult r_;
};

std::string describe(HalfInt l, HalfInt m, HalfInt n, const ComplexEulerAngles& a) {
  return "l=" + l.str() + " m=" + m.str() + " n=" + n.str() + " angles=" + angles_json(a);
}

std::string describe(HalfInt l, HalfInt m, HalfInt n, double theta, double tau) {
  return "l=" + l.str() + " m=" + m.str() + " n=" + n.str() + " theta=" + format_double(theta) +
         " tau=" + format_double(tau);
}

int twice_l_limit(const VerifyOptions& opt, int fallback) {
  return opt.max_twice_l >= 0 ? opt.max_twice_l : fallback;
}

SuiteReport oracle_suite(const VerifyOptions& opt) {
  const double s = opt.tol_scale;
  const int top = twice_l_limit(opt, 6);
  Tracker rep("oracle", "rep_vs_polynomial", tol::kOracle * s);
  Tracker fac("oracle", "methods.factorized", tol::kMethods * s);
  Tracker hyp("oracle", "methods.hypergeometric", tol::kMethods * s);
  Tracker hyp_printed("oracle", "methods.hypergeometric_printed_params", 0.0, true);
  Tracker t1("oracle", "closed_form.l=1/2", tol::kClosedForm * s);
  Tracker t2("oracle", "closed_form.l=1", tol::kClosedForm * s);
  Tracker unit("oracle", "su2.unitarity", tol::kUnitarity * s);
  Tracker red("oracle", "su2.reduction", tol::kSu2Reduction * s);

  SplitMix64 rng(opt.seed);
  for (int t = 0; t < opt.trials; ++t) {
    const ComplexEulerAngles a = sample_safe_box(rng);
    const GroupElement g = to_matrix(a);
    for (int tl = 0; tl <= top; ++tl) {
      const HalfInt l = HalfInt::from_twice(tl);
      const RepMatrix r = rep_matrix(l, a);
      rep.add(relative_deviation(r.entries, oracle_matrix(l, g).entries),
              [&] { return "l=" + l.str() + " angles=" + angles_json(a); });
      for (HalfInt m : projections(l))
        for (HalfInt n : projections(l)) {
          const cplx z = z_function(l, m, n, a.theta, a.tau);
          const double scale = 1.0 + std::abs(z);
          fac.add(std::abs(z_function(l, m, n, a.theta, a.tau, ZEvalMethod::Factorized) - z) / scale,
                  [&] { return describe(l, m, n, a.theta, a.tau); });
          hyp.add(std::abs(z_function(l, m, n, a.theta, a.tau, ZEvalMethod::HypergeometricProduct) - z) / scale,
                  [&] { return describe(l, m, n, a.theta, a.tau); });
          if (opt.report_printed && tl >= 1) {
            // the printed parameters do not always give a terminating series; skip those
            try {
              cplx zp = 0.0;
              for (HalfInt k : projections(l))
                zp += spherical_p_hyp(l, m, k, a.theta, HypParams::Printed) *
                      jacobi_p_hyp(l, n, k, a.tau, HypParams::Printed);
              hyp_printed.add(std::abs(zp - z) / scale, [&] { return describe(l, m, n, a.theta, a.tau); });
            } catch (const std::exception&) {
            }
          }
        }
      // rotations only
      const RepMatrix su = rep_matrix(l, {a.phi, 0.0, a.theta, 0.0, a.psi, 0.0});
      unit.add(unitarity_defect(su), [&] { return "l=" + l.str() + " angles=" + angles_json(a); });
      for (HalfInt m : projections(l))
        for (HalfInt n : projections(l))
          red.add(std::abs(z_function(l, m, n, a.theta, 0.0) - spherical_p(l, m, n, a.theta)),
                  [&] { return describe(l, m, n, a.theta, 0.0); });
    }
    // closed forms on |tau| <= 1
    const double th = rng.uniform(0.0, std::numbers::pi), ta = rng.uniform(-1.0, 1.0);
    for (int tl : {1, 2}) {
      const HalfInt l = HalfInt::from_twice(tl);
      const RepMatrix e = explicit_t_matrix(l, th, ta);
      for (HalfInt m : projections(l))
        for (HalfInt n : projections(l)) {
          const double d = std::abs(e.at(m, n) - z_function(l, m, n, th, ta));
          (tl == 1 ? t1 : t2).add(d, [&] { return describe(l, m, n, th, ta); });
        }
    }
  }
  SuiteReport rpt;
  for (const Tracker* t : {&rep, &fac, &hyp, &t1, &t2, &unit, &red}) rpt.results.push_back(t->result());
  if (opt.report_printed) rpt.results.push_back(hyp_printed.result());
  return rpt;
}

SuiteReport addition_suite(const VerifyOptions& opt) {
  const double s = opt.tol_scale;
  const int top = twice_l_limit(opt, 6);
  Tracker hom("addition", "homomorphism", tol::kHomomorphism * s);
  Tracker su2("addition", "homomorphism.su2", tol::kHomomorphismSu2 * s);
  Tracker special("addition", "addition_theorem.special", tol::kHomomorphism * s);
  Tracker general("addition", "addition_theorem.general", tol::kHomomorphism * s);
  Tracker general_p("addition", "addition_theorem.general_printed", 0.0, true);
  Tracker composition("addition", "composition_matrix", tol::kHomomorphism * s);
  Tracker omega_p("addition", "composition_subgroup_printed", 0.0, true);

  SplitMix64 rng(opt.seed ^ 0xadd1ULL);
  for (int t = 0; t < opt.trials; ++t) {
    const ComplexEulerAngles a1 = sample_safe_box(rng), a2 = sample_safe_box(rng);
    const ComplexEulerAngles r1{a1.phi, 0.0, a1.theta, 0.0, a1.psi, 0.0};
    const ComplexEulerAngles r2{a2.phi, 0.0, a2.theta, 0.0, a2.psi, 0.0};
    const auto pair = [&] { return "g1=" + angles_json(a1) + " g2=" + angles_json(a2); };
    const GroupElement prod = to_matrix(a1) * to_matrix(a2);
    const GroupElement comp = to_matrix(compose(a1, a2));
    composition.add(std::min(distance(comp, prod), distance(comp, -prod)), pair);
    if (opt.report_printed) {
      const ComplexEulerAngles w = compose_omega2(a1, a2.phi_c(), a2.theta_c(), a2.psi_c(), Omega2Form::Printed);
      const ComplexEulerAngles wc = compose_omega2(a1, a2.phi_c(), a2.theta_c(), a2.psi_c(), Omega2Form::Corrected);
      const GroupElement gp = to_matrix(w), gc = to_matrix(wc);
      omega_p.add(std::min(distance(gp, gc), distance(gp, -gc)), pair);
    }
    for (int tl = 0; tl <= top; ++tl) {
      const HalfInt l = HalfInt::from_twice(tl);
      hom.add(homomorphism_residual(l, a1, a2), [&] { return "l=" + l.str() + " " + pair(); });
      su2.add(homomorphism_residual(l, r1, r2), [&] { return "l=" + l.str() + " rotations only"; });
      for (HalfInt m : projections(l))
        for (HalfInt n : projections(l)) {
          const auto where = [&] { return describe(l, m, n, a1) + " g2=" + angles_json(a2); };
          special.add(addition_theorem_residual(l, m, n, a1, a2, AdditionForm::Special), where);
          general.add(addition_theorem_residual(l, m, n, a1, a2, AdditionForm::General), where);
          if (opt.report_printed && tl >= 1)
            general_p.add(addition_theorem_residual(l, m, n, a1, a2, AdditionForm::GeneralPrinted), where);
        }
    }
  }
  SuiteReport rpt;
  for (const Tracker* t : {&composition, &hom, &su2, &special, &general}) rpt.results.push_back(t->result());
  if (opt.report_printed) {
    rpt.results.push_back(general_p.result());
    rpt.results.push_back(omega_p.result());
  }
  return rpt;
}

SuiteReport commutator_suite(const VerifyOptions& opt) {
  const int top = twice_l_limit(opt, 2);
  FdOptions fd;
  fd.h = tol::kCommutatorStep;
  fd.signs = opt.signs;
  std::vector<Tracker> trackers;
  std::vector<CommutatorRelation> rels = rotation_boost_relations();
  const auto& xy = ladder_algebra_relations();
  rels.insert(rels.end(), xy.begin(), xy.end());
  for (const auto& r : rels) trackers.emplace_back("commutators", r.name, tol::kCommutator * opt.tol_scale);

  SplitMix64 rng(opt.seed ^ 0xc0ULL);
  for (int t = 0; t < opt.trials; ++t) {
    const ComplexEulerAngles p = sample_safe_box(rng);
    // one function per trial keeps the cost linear in trials
    const HalfInt l = HalfInt::from_twice(t % (top + 1));
    const auto ps = projections(l);
    const HalfInt m = ps[rng.below(static_cast<int>(ps.size()))];
    const HalfInt n = ps[rng.below(static_cast<int>(ps.size()))];
    const ParamFunction f = m_family(l, m, n);
    for (std::size_t i = 0; i < rels.size(); ++i)
      trackers[i].add(commutator_residual(rels[i].a, rels[i].b, rels[i].expected, f, p, fd),
                      [&] { return describe(l, m, n, p); });
  }
  SuiteReport rpt;
  for (const auto& t : trackers) rpt.results.push_back(t.result());
  return rpt;
}

SuiteReport ladder_suite(const VerifyOptions& opt) {
  const int top = twice_l_limit(opt, 2);
  FdOptions fd;
  fd.h = tol::kLadderStep;
  fd.signs = opt.signs;
  const OperatorId ops[] = {OperatorId::Xplus, OperatorId::Xminus, OperatorId::X3,
                            OperatorId::Yplus, OperatorId::Yminus, OperatorId::Y3};
  std::vector<Tracker> trackers;
  for (OperatorId op : ops) trackers.emplace_back("ladders", operator_name(op), tol::kLadder * opt.tol_scale);
  const OperatorId lad[] = {OperatorId::Xplus, OperatorId::Xminus, OperatorId::Yplus, OperatorId::Yminus};
  std::vector<Tracker> expl;
  for (OperatorId op : lad)
    expl.emplace_back("ladders", "explicit_form." + operator_name(op), tol::kExplicitOperator * opt.tol_scale);
  Tracker y3m("ladders", "Y3_eigenvalue_m", 0.0, true);

  SplitMix64 rng(opt.seed ^ 0x1adULL);
  for (int t = 0; t < opt.trials; ++t) {
    const ComplexEulerAngles p = sample_safe_box(rng);
    for (int tl = 0; tl <= top; ++tl) {
      const HalfInt l = HalfInt::from_twice(tl);
      for (HalfInt m : projections(l))
        for (HalfInt n : projections(l)) {
          for (std::size_t i = 0; i < std::size(ops); ++i)
            trackers[i].add(ladder_residual(l, m, n, ops[i], p, fd), [&] { return describe(l, m, n, p); });
          if (opt.report_printed) {
            const cplx y3 = apply(OperatorId::Y3, m_family(l, m, n), p, fd);
            y3m.add(std::abs(y3 - m.value() * m_function(l, m, n, p)), [&] { return describe(l, m, n, p); });
          }
        }
    }
    for (std::size_t i = 0; i < std::size(lad); ++i) {
      const auto a = operator_coefficients(lad[i], p, opt.signs), b = explicit_ladder_coefficients(lad[i], p);
      double d = 0.0;
      for (int k = 0; k < 6; ++k) d = std::max(d, std::abs(a[k] - b[k]));
      expl[i].add(d, [&] { return "angles=" + angles_json(p); });
    }
  }
  SuiteReport rpt;
  for (const auto& t : trackers) rpt.results.push_back(t.result());
  for (const auto& t : expl) rpt.results.push_back(t.result());
  if (opt.report_printed) rpt.results.push_back(y3m.result());
  return rpt;
}

SuiteReport recurrence_suite(const VerifyOptions& opt) {
  const int top = twice_l_limit(opt, 4);
  std::vector<Tracker> corr, printed;
  for (int i = 0; i < kRecurrenceCount; ++i) {
    const std::string name = recurrence_name(static_cast<RecurrenceId>(i));
    corr.emplace_back("recurrences", name, tol::kRecurrence * opt.tol_scale);
    printed.emplace_back("recurrences", name + "_printed", 0.0, true);
  }
  Tracker dth("recurrences", "derivative.theta", tol::kDerivative * opt.tol_scale);
  Tracker dta("recurrences", "derivative.tau", tol::kDerivative * opt.tol_scale);

  SplitMix64 rng(opt.seed ^ 0x2ecULL);
  const double h = tol::kDerivativeStep;
  for (int t = 0; t < opt.trials; ++t) {
    const ComplexEulerAngles p = sample_safe_box(rng);
    const double th = p.theta, ta = p.tau;
    for (int tl = 0; tl <= top; ++tl) {
      const HalfInt l = HalfInt::from_twice(tl);
      for (HalfInt m : projections(l))
        for (HalfInt n : projections(l)) {
          const auto where = [&] { return describe(l, m, n, th, ta); };
          for (int i = 0; i < kRecurrenceCount; ++i) {
            const auto id = static_cast<RecurrenceId>(i);
            corr[i].add(recurrence_residual(id, l, m, n, th, ta), where);
            if (opt.report_printed && tl >= 1)
              printed[i].add(recurrence_residual(id, l, m, n, th, ta, RecurrenceForm::Printed), where);
          }
          const ZJet z = z_jet(l, m, n, th, ta);
          const cplx fth = (z_function(l, m, n, th + h, ta) - z_function(l, m, n, th - h, ta)) / (2 * h);
          const cplx fta = (z_function(l, m, n, th, ta + h) - z_function(l, m, n, th, ta - h)) / (2 * h);
          dth.add(std::abs(fth - z.d_theta), where);
          dta.add(std::abs(fta - z.d_tau), where);
        }
    }
  }
  SuiteReport rpt;
  for (const auto& t : corr) rpt.results.push_back(t.result());
  rpt.results.push_back(dth.result());
  rpt.results.push_back(dta.result());
  if (opt.report_printed)
    for (const auto& t : printed) rpt.results.push_back(t.result());
  return rpt;
}

SuiteReport cg_suite(const VerifyOptions& opt) {
  const double s = opt.tol_scale;
  Tracker orth("cg", "orthogonality", tol::kOrthogonality * s);
  Tracker forms("cg", "hypergeometric_vs_racah", tol::kCgForms * s);
  Tracker exact("cg", "exact_vs_double", tol::kCgForms * s);
  Tracker b1("cg", "squared_table.l1=1", 0.0);
  Tracker bh("cg", "squared_table.l1=1/2", 0.0);
  Tracker nine("cg", "coupling.l1=1", tol::kCoupling * s);
  Tracker four("cg", "coupling.l1=1/2", tol::kCoupling * s);
  Tracker nine_p("cg", "coupling.l1=1_printed", 0.0, true);
  Tracker four_p("cg", "coupling.l1=1/2_printed", 0.0, true);

  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) {
      const HalfInt l1 = HalfInt::from_twice(a), l2 = HalfInt::from_twice(b);
      orth.add(cg_orthogonality_residual(l1, l2), [&] { return "l1=" + l1.str() + " l2=" + l2.str(); });
      const HalfInt lo = l1 > l2 ? l1 - l2 : l2 - l1;
      for (HalfInt L = lo; L <= l1 + l2; L += 1)
        for (HalfInt j : projections(l1))
          for (HalfInt k : projections(l2)) {
            const CGIndex c{l1, l2, L, j, k, j + k};
            if (!selection_rule(c)) continue;
            const double v = clebsch_gordan(c);
            const auto where = [&] {
              return "l1=" + l1.str() + " l2=" + l2.str() + " l=" + L.str() + " j=" + j.str() + " k=" + k.str();
            };
            forms.add(std::abs(v - clebsch_gordan_racah(c)), where);
            exact.add(std::abs(v - clebsch_gordan_exact(c).value()), where);
          }
    }

  // exact table comparison: residual counts mismatching admissible entries
  for (int tl = 2; tl <= 12; ++tl) {
    const HalfInt l = HalfInt::from_twice(tl);
    for (HalfInt m : projections(l + 1)) {
      const auto p = printed_bbar_l1(l, m), c = cg_squared_l1(l, m);
      double bad = 0.0;
      for (int r = 0; r < 3; ++r)
        for (int k = 0; k < 3; ++k)
          if (bbar_admissible(false, l, m, r, k) && p[r][k] != c[r][k]) bad += 1.0;
      b1.add(bad, [&] { return "l=" + l.str() + " m=" + m.str(); });
    }
  }
  for (int tl = 1; tl <= 12; ++tl) {
    const HalfInt l = HalfInt::from_twice(tl);
    for (HalfInt m : projections(l + kHalf)) {
      const auto p = printed_bbar_half(l, m), c = cg_squared_half(l, m);
      double bad = 0.0;
      for (int r = 0; r < 2; ++r)
        for (int k = 0; k < 2; ++k)
          if (bbar_admissible(true, l, m, r, k) && p[r][k] != c[r][k]) bad += 1.0;
      bh.add(bad, [&] { return "l=" + l.str() + " m=" + m.str(); });
    }
  }

  SplitMix64 rng(opt.seed ^ 0xc9ULL);
  const int top = twice_l_limit(opt, 4);
  for (int t = 0; t < opt.trials; ++t) {
    const ComplexEulerAngles p = sample_safe_box(rng);
    for (int tl = 1; tl <= top; ++tl) {
      const HalfInt l = HalfInt::from_twice(tl);
      for (bool is_nine : {true, false}) {
        if (is_nine && tl < 2) continue;
        const HalfInt l1 = is_nine ? HalfInt(1) : kHalf;
        const CouplingKind kind = is_nine ? CouplingKind::NineL1 : CouplingKind::FourHalf;
        for (HalfInt j : projections(l + l1))
          for (HalfInt m : projections(l + l1))
            for (int row = 1; row <= (is_nine ? 9 : 4); ++row) {
              const auto where = [&] {
                return "row=" + std::to_string(row) + " " + describe(l, j, m, p);
              };
              const CouplingResult c = coupling_recurrence_residual(kind, row, l, j, m, p);
              if (c.skipped) continue;
              (is_nine ? nine : four).add(c.residual, where);
              if (opt.report_printed) {
                const CouplingResult q = coupling_recurrence_residual(kind, row, l, j, m, p, CouplingForm::Printed);
                (is_nine ? nine_p : four_p).add(q.residual, where);
              }
            }
      }
    }
  }
  SuiteReport rpt;
  for (const Tracker* t : {&orth, &forms, &exact, &b1, &bh, &nine, &four}) rpt.results.push_back(t->result());
  if (opt.report_printed) {
    rpt.results.push_back(nine_p.result());
    rpt.results.push_back(four_p.result());
  }
  return rpt;
}

}  // namespace

SuiteReport run_suite(Suite s, const VerifyOptions& opt) {
  if (opt.trials < 1) throw DomainError("trials must be >= 1");
  switch (s) {
    case Suite::Oracle: return oracle_suite(opt);
    case Suite::Addition: return addition_suite(opt);
    case Suite::Commutators: return commutator_suite(opt);
    case Suite::Ladders: return ladder_suite(opt);
    case Suite::Recurrences: return recurrence_suite(opt);
    case Suite::Cg: return cg_suite(opt);
    case Suite::All: {
      SuiteReport all;
      for (Suite x : {Suite::Oracle, Suite::Addition, Suite::Commutators, Suite::Ladders,
                      Suite::Recurrences, Suite::Cg})
        all.append(run_suite(x, opt));
      return all;
    }
  }
  throw DomainError("unknown suite");
}

}  // namespace lh
