// lorentzhs: evaluate, tabulate and verify matrix elements of SL(2,C) representations.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lh/cg.hpp"
#include "lh/errors.hpp"
#include "lh/euler.hpp"
#include "lh/hyper.hpp"
#include "lh/io.hpp"
#include "lh/oracle.hpp"
#include "lh/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBreach = 1;
constexpr int kExitInput = 2;
constexpr int kExitWrite = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WriteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

lh::HalfInt half(const std::string& flag, const std::string& text) {
  try {
    return lh::HalfInt::parse(text);
  } catch (const lh::DomainError& e) {
    throw InputError(flag + ": " + e.what());
  }
}

lh::ComplexEulerAngles parse_angles(const std::string& flag, const std::string& text) {
  std::stringstream ss(text);
  std::string cell;
  double v[6];
  int k = 0;
  while (std::getline(ss, cell, ',')) {
    if (k == 6) throw InputError(flag + ": expected six comma-separated angles");
    try {
      std::size_t used = 0;
      v[k] = std::stod(cell, &used);
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw InputError(flag + ": not a number: '" + cell + "'");
    }
    ++k;
  }
  if (k != 6) throw InputError(flag + ": expected six comma-separated angles");
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

// ---- eval ----

struct EvalArgs {
  std::string l = "0", m = "0", n = "0";
  lh::ComplexEulerAngles a;
  std::string method = "doublesum";
  std::string format = "json";
};

int cmd_eval(const EvalArgs& args) {
  const lh::HalfInt l = half("--l", args.l), m = half("--m", args.m), n = half("--n", args.n);
  if (l < 0) throw InputError("--l must be nonnegative");
  if (!lh::is_projection(l, m)) throw InputError("--m must satisfy |m| <= l with l - m integral");
  if (!lh::is_projection(l, n)) throw InputError("--n must satisfy |n| <= l with l - n integral");

  lh::cplx value;
  if (args.method == "doublesum")
    value = lh::m_function(l, m, n, args.a, lh::ZEvalMethod::DoubleSum);
  else if (args.method == "hyp")
    value = lh::m_function(l, m, n, args.a, lh::ZEvalMethod::HypergeometricProduct);
  else if (args.method == "factorized")
    value = lh::m_function(l, m, n, args.a, lh::ZEvalMethod::Factorized);
  else
    value = lh::oracle_matrix(l, lh::to_matrix(args.a)).at(m, n);

  if (args.format == "csv") {
    std::cout << "l,m,n,phi,eps,theta,tau,psi,veps,re,im,method\n"
              << l.str() << ',' << m.str() << ',' << n.str();
    for (double x : {args.a.phi, args.a.eps, args.a.theta, args.a.tau, args.a.psi, args.a.veps})
      std::cout << ',' << lh::format_double(x);
    std::cout << ',' << lh::format_double(value.real()) << ',' << lh::format_double(value.imag())
              << ',' << args.method << '\n';
  } else {
    std::cout << "{\"l\":\"" << l.str() << "\",\"m\":\"" << m.str() << "\",\"n\":\"" << n.str()
              << "\",\"angles\":" << lh::angles_json(args.a)
              << ",\"re\":" << lh::format_double(value.real())
              << ",\"im\":" << lh::format_double(value.imag()) << ",\"method\":\"" << args.method
              << "\"}\n";
  }
  return kExitOk;
}

// ---- table ----

struct TableArgs {
  std::string l = "0";
  lh::TableGrid grid;
  std::string out;
  std::string format = "csv";
};

int cmd_table(const TableArgs& args) {
  const lh::HalfInt l = half("--l", args.l);
  if (l < 0) throw InputError("--l must be nonnegative");
  std::vector<lh::TableRow> rows;
  try {
    rows = lh::make_table(l, args.grid);
  } catch (const lh::DomainError& e) {
    throw InputError(e.what());
  }
  std::ostringstream body;
  if (args.format == "json")
    lh::write_table_json(body, l, args.grid, rows);
  else
    lh::write_csv(body, rows);

  if (args.out.empty() || args.out == "-") {
    std::cout << body.str();
    return kExitOk;
  }
  std::ofstream f(args.out, std::ios::binary);
  if (!f) throw WriteError("cannot open '" + args.out + "' for writing");
  f << body.str();
  f.close();
  if (!f) throw WriteError("write to '" + args.out + "' failed");
  return kExitOk;
}

// ---- verify ----

std::vector<lh::TableRow> read_table(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read table '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && text[first] == '{') {
      const auto doc = nlohmann::json::parse(text);
      std::vector<lh::TableRow> rows;
      for (const auto& r : doc.at("rows")) {
        lh::TableRow row{lh::HalfInt::parse(r.at("l").get<std::string>()),
                         lh::HalfInt::parse(r.at("m").get<std::string>()),
                         lh::HalfInt::parse(r.at("n").get<std::string>()),
                         r.at("theta").get<double>(),
                         r.at("tau").get<double>(),
                         {r.at("re").get<double>(), r.at("im").get<double>()}};
        if (!lh::is_projection(row.l, row.m) || !lh::is_projection(row.l, row.n))
          throw lh::DomainError("index out of range");
        rows.push_back(row);
      }
      return rows;
    }
    std::istringstream is(text);
    return lh::read_csv(is);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("table '" + path + "': " + e.what());
  } catch (const lh::DomainError& e) {
    throw InputError("table '" + path + "': " + e.what());
  }
}

int verify_table(const std::string& path) {
  const auto rows = read_table(path);
  long long bad = 0;
  for (const auto& r : rows) {
    const lh::cplx z = lh::z_function(r.l, r.m, r.n, r.theta, r.tau);
    if (z.real() != r.value.real() || z.imag() != r.value.imag()) {
      if (bad == 0)
        std::cout << "FAIL from-table first mismatch l=" << r.l.str() << " m=" << r.m.str()
                  << " n=" << r.n.str() << " theta=" << lh::format_double(r.theta)
                  << " tau=" << lh::format_double(r.tau) << " table=" << lh::format_complex(r.value)
                  << " recomputed=" << lh::format_complex(z) << '\n';
      ++bad;
    }
  }
  std::cout << (bad ? "FAIL" : "PASS") << " from-table rows=" << rows.size() << " mismatches=" << bad
            << '\n';
  return bad ? kExitBreach : kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 1;
  int trials = 20;
  std::string from_table;
  int flip_sign = -1;
  bool no_printed = false;
};

int cmd_verify(const VerifyArgs& args) {
  if (!args.from_table.empty()) return verify_table(args.from_table);
  lh::VerifyOptions opt;
  opt.seed = args.seed;
  opt.trials = args.trials;
  opt.report_printed = !args.no_printed;
  try {
    opt.tol_scale = lh::tol_scale_from_env();
    if (args.flip_sign >= 0) opt.signs = lh::CombinationSigns::with_flip(args.flip_sign);
    if (opt.trials < 1) throw lh::DomainError("--trials must be >= 1");
    const lh::Suite suite = lh::parse_suite(args.suite);
    if (args.flip_sign >= 0)
      std::cout << "# negative control: flipped " << lh::CombinationSigns::flip_name(args.flip_sign) << '\n';
    const lh::SuiteReport rpt = lh::run_suite(suite, opt);
    int failed = 0;
    for (const auto& r : rpt.results) {
      std::cout << lh::format_result(r) << '\n';
      if (!r.passed()) ++failed;
    }
    std::cout << (failed ? "FAIL" : "PASS") << " suite=" << args.suite << " identities="
              << rpt.results.size() << " failed=" << failed << '\n';
    return failed ? kExitBreach : kExitOk;
  } catch (const lh::DomainError& e) {
    throw InputError(e.what());
  }
}

// ---- compose ----

int cmd_compose(const std::string& g1, const std::string& g2) {
  const auto a1 = parse_angles("--g1", g1), a2 = parse_angles("--g2", g2);
  const lh::Composition c = lh::compose_detailed(a1, a2);
  std::cout << "{\"angles\":" << lh::angles_json(c.angles)
            << ",\"fallback\":" << (c.fallback ? "true" : "false") << "}\n";
  return kExitOk;
}

// ---- cg ----

struct CgArgs {
  std::string l1, l2, l, j, k;
};

int cmd_cg(const CgArgs& args) {
  const lh::CGIndex idx{half("--l1", args.l1), half("--l2", args.l2), half("--l", args.l),
                        half("--j", args.j),   half("--k", args.k),
                        half("--j", args.j) + half("--k", args.k)};
  if (!lh::is_valid(idx)) throw InputError("invalid coupling (triangle rule or projection range)");
  const lh::ExactCG e = lh::clebsch_gordan_exact(idx);
  std::cout << "{\"exact\":\"" << e.str() << "\",\"value\":" << lh::format_double(lh::clebsch_gordan(idx))
            << "}\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix elements of finite-dimensional SL(2,C) representations"};
  app.require_subcommand(1);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "evaluate one matrix element");
  eval->add_option("--l", ev.l, "weight, e.g. 3/2")->required();
  eval->add_option("--m", ev.m, "row index")->required();
  eval->add_option("--n", ev.n, "column index")->required();
  eval->add_option("--theta", ev.a.theta)->required();
  eval->add_option("--tau", ev.a.tau)->required();
  eval->add_option("--phi", ev.a.phi);
  eval->add_option("--eps", ev.a.eps);
  eval->add_option("--psi", ev.a.psi);
  eval->add_option("--veps", ev.a.veps);
  eval->add_option("--method", ev.method)
      ->check(CLI::IsMember({"doublesum", "hyp", "factorized", "oracle"}));
  eval->add_option("--format", ev.format)->check(CLI::IsMember({"json", "csv"}));

  TableArgs tb;
  auto* table = app.add_subcommand("table", "tabulate Z^l on a (theta, tau) grid");
  table->add_option("--l", tb.l)->required();
  table->add_option("--theta-steps", tb.grid.theta_steps);
  table->add_option("--tau-steps", tb.grid.tau_steps);
  table->add_option("--tau-max", tb.grid.tau_max);
  table->add_option("--out", tb.out, "output path ('-' for stdout)");
  table->add_option("--format", tb.format)->check(CLI::IsMember({"csv", "json"}));

  VerifyArgs vf;
  auto* verify = app.add_subcommand("verify", "run identity suites");
  verify->add_option("--suite", vf.suite)
      ->check(CLI::IsMember({"addition", "commutators", "ladders", "recurrences", "cg", "oracle", "all"}));
  verify->add_option("--seed", vf.seed);
  verify->add_option("--trials", vf.trials);
  verify->add_option("--from-table", vf.from_table, "re-evaluate a table and compare bit for bit");
  verify->add_flag("--no-printed", vf.no_printed, "omit INFO rows for printed variants");
  verify->add_option("--flip-sign", vf.flip_sign)->group("");  // negative-control fixture

  std::string g1, g2;
  auto* compose = app.add_subcommand("compose", "angles of the product of two elements");
  compose->add_option("--g1", g1, "phi,eps,theta,tau,psi,veps")->required();
  compose->add_option("--g2", g2, "phi,eps,theta,tau,psi,veps")->required();

  CgArgs cg;
  auto* cgc = app.add_subcommand("cg", "Clebsch-Gordan coefficient C(l1 l2 l; j k j+k)");
  cgc->add_option("--l1", cg.l1)->required();
  cgc->add_option("--l2", cg.l2)->required();
  cgc->add_option("--l", cg.l)->required();
  cgc->add_option("--j", cg.j)->required();
  cgc->add_option("--k", cg.k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*eval) return cmd_eval(ev);
    if (*table) return cmd_table(tb);
    if (*verify) return cmd_verify(vf);
    if (*compose) return cmd_compose(g1, g2);
    if (*cgc) return cmd_cg(cg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const WriteError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitWrite;
  } catch (const lh::UnsupportedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
