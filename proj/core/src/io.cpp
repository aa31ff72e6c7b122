#include "lh/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "lh/errors.hpp"
#include "lh/hyper.hpp"

namespace lh {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(cplx z) {
  std::string im = format_double(z.imag());
  if (im[0] != '-') im = "+" + im;
  return format_double(z.real()) + im + "i";
}

double TableGrid::theta_at(int i) const {
  return theta_steps > 1 ? std::numbers::pi * i / (theta_steps - 1) : 0.0;
}

double TableGrid::tau_at(int k) const {
  return tau_steps > 1 ? tau_max * k / (tau_steps - 1) : 0.0;
}

std::vector<TableRow> make_table(HalfInt l, const TableGrid& grid) {
  if (grid.theta_steps < 1 || grid.tau_steps < 1) throw DomainError("table: grid steps must be >= 1");
  if (!std::isfinite(grid.tau_max)) throw DomainError("table: tau-max must be finite");
  const auto ps = projections(l);
  std::vector<TableRow> rows;
  rows.reserve(static_cast<std::size_t>(grid.theta_steps) * grid.tau_steps * ps.size() * ps.size());
  for (int i = 0; i < grid.theta_steps; ++i)
    for (int k = 0; k < grid.tau_steps; ++k) {
      const double th = grid.theta_at(i), ta = grid.tau_at(k);
      for (HalfInt m : ps)
        for (HalfInt n : ps) rows.push_back({l, m, n, th, ta, z_function(l, m, n, th, ta)});
    }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows)
    os << r.l.str() << ',' << r.m.str() << ',' << r.n.str() << ',' << format_double(r.theta) << ','
       << format_double(r.tau) << ',' << format_double(r.value.real()) << ','
       << format_double(r.value.imag()) << '\n';
}

namespace {

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw DomainError("csv: not a number: '" + s + "'");
  }
  if (used != s.size()) throw DomainError("csv: not a number: '" + s + "'");
  return v;
}

}  // namespace

std::vector<TableRow> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader)
    throw DomainError(std::string("csv: expected header '") + kCsvHeader + "'");
  std::vector<TableRow> rows;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 7) throw DomainError("csv: line " + std::to_string(lineno) + " needs 7 fields");
    TableRow r{HalfInt::parse(f[0]), HalfInt::parse(f[1]), HalfInt::parse(f[2]),
               parse_double(f[3]), parse_double(f[4]), {parse_double(f[5]), parse_double(f[6])}};
    if (!is_projection(r.l, r.m) || !is_projection(r.l, r.n))
      throw DomainError("csv: line " + std::to_string(lineno) + ": index out of range");
    rows.push_back(r);
  }
  return rows;
}

void write_table_json(std::ostream& os, HalfInt l, const TableGrid& grid,
                      const std::vector<TableRow>& rows) {
  os << "{\"l\":\"" << l.str() << "\",\"theta_steps\":" << grid.theta_steps
     << ",\"tau_steps\":" << grid.tau_steps << ",\"tau_max\":" << format_double(grid.tau_max)
     << ",\"rows\":[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << (i ? "," : "") << "\n{\"l\":\"" << r.l.str() << "\",\"m\":\"" << r.m.str()
       << "\",\"n\":\"" << r.n.str() << "\",\"theta\":" << format_double(r.theta)
       << ",\"tau\":" << format_double(r.tau) << ",\"re\":" << format_double(r.value.real())
       << ",\"im\":" << format_double(r.value.imag()) << "}";
  }
  os << "\n]}\n";
}

std::string angles_json(const ComplexEulerAngles& a) {
  return "{\"phi\":" + format_double(a.phi) + ",\"eps\":" + format_double(a.eps) +
         ",\"theta\":" + format_double(a.theta) + ",\"tau\":" + format_double(a.tau) +
         ",\"psi\":" + format_double(a.psi) + ",\"veps\":" + format_double(a.veps) + "}";
}

}  // namespace lh
