#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ising/model.hpp"

namespace ising::cli {

// One line of the validation table. status is pass, fail, precision, domain or error.
struct CheckRow {
  std::string check;
  std::string label;
  Real defect;
  Real tolerance;
  std::string status;
  std::string detail;
};

struct ValidateOptions {
  int digits = 40;
  std::vector<LatticeSpec> sizes;  // empty: the default size set
  std::string only;                // run a single check by name
  double tol_cap = 1e-8;           // tolerances are min(10^(k - digits), tol_cap)
};

const std::vector<std::string>& check_names();
std::vector<LatticeSpec> default_sizes();
std::vector<CheckRow> run_validation(const ValidateOptions& opts);
// 0 all pass, 3 any precision failure, 2 any domain error, 1 any other failure
int validation_exit_code(const std::vector<CheckRow>& rows);
void write_check_table(std::ostream& out, const std::vector<CheckRow>& rows, bool json);

// "a:b:n" -> n evenly spaced values from a to b inclusive
std::vector<Real> parse_range(const std::string& text);
// "8,16x8" -> 8x8 and 16x8
std::vector<LatticeSpec> parse_sizes(const std::string& text);

// Full command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ising::cli
