#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lh/euler.hpp"
#include "lh/halfint.hpp"
#include "lh/matrix.hpp"

namespace lh {

// %.17g
std::string format_double(double x);
std::string format_complex(cplx z);  // "re+imi"

struct TableGrid {
  int theta_steps = 2;
  int tau_steps = 2;
  double tau_max = 1.0;
  double theta_at(int i) const;  // pi i / (N-1); 0 when N == 1
  double tau_at(int k) const;    // T k / (M-1); 0 when M == 1
};

struct TableRow {
  HalfInt l, m, n;
  double theta = 0.0, tau = 0.0;
  cplx value{0.0};
};

// all (2l+1)^2 entries of Z^l on the grid; theta outer, tau, then m, n ascending
std::vector<TableRow> make_table(HalfInt l, const TableGrid& grid);

inline constexpr const char* kCsvHeader = "l,m,n,theta,tau,re,im";
void write_csv(std::ostream& os, const std::vector<TableRow>& rows);
// throws DomainError on a malformed header or row
std::vector<TableRow> read_csv(std::istream& is);
void write_table_json(std::ostream& os, HalfInt l, const TableGrid& grid,
                      const std::vector<TableRow>& rows);

// {"phi":..,"eps":..,...} with %.17g numbers
std::string angles_json(const ComplexEulerAngles& a);

}  // namespace lh
