#pragma once

#include <string>
#include <variant>
#include <vector>

namespace casimir {

//! Fixed-format numeric rendering: 12 significant digits, scientific notation
//! for |x| < 1e-3, plain for zero. Identical inputs give identical bytes.
std::string format_number(double x);

std::string json_escape(const std::string& s);

//! Default check tolerance, 1e-10, overridable through CASIMIR_TOL.
double default_tolerance();

struct Check {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

// One machine-readable result of a CLI invocation. Scalar inputs are echoed
// in insertion order; `value` may be a number, a string, a flat array or a
// table of rows. Extra named sections (expression, fit) follow the fixed
// fields.
struct RunReport {
  using Scalar = std::variant<double, long long, bool, std::string>;
  using Value = std::variant<double, std::string, std::vector<double>,
                             std::vector<std::vector<double>>>;

  std::string quantity;
  std::vector<std::pair<std::string, Scalar>> inputs;
  Value value = 0.0;
  std::string units = "natural (hbar=c=1)";
  std::vector<Check> checks;
  double runtime_ms = 0.0;
  std::vector<std::pair<std::string, Value>> extras;
};

std::string to_json(const RunReport& r);

//! CSV rendering: scalar values as a single cell, tables as rows; checks and
//! extras appear as trailing comment lines.
std::string to_csv(const RunReport& r, const std::vector<std::string>& columns = {});

}  // namespace casimir
