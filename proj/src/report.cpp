#include "casimir/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace casimir {

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  if (std::abs(x) < 1e-3)
    std::snprintf(buf, sizeof buf, "%.11e", x);
  else
    std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

double default_tolerance() {
  if (const char* env = std::getenv("CASIMIR_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
  }
  return 1e-10;
}

namespace {

std::string scalar_json(const RunReport::Scalar& s) {
  if (std::holds_alternative<double>(s)) return format_number(std::get<double>(s));
  if (std::holds_alternative<long long>(s)) return std::to_string(std::get<long long>(s));
  if (std::holds_alternative<bool>(s)) return std::get<bool>(s) ? "true" : "false";
  return "\"" + json_escape(std::get<std::string>(s)) + "\"";
}

std::string value_json(const RunReport::Value& v) {
  std::ostringstream os;
  if (std::holds_alternative<double>(v)) {
    os << format_number(std::get<double>(v));
  } else if (std::holds_alternative<std::string>(v)) {
    os << '"' << json_escape(std::get<std::string>(v)) << '"';
  } else if (std::holds_alternative<std::vector<double>>(v)) {
    os << '[';
    const auto& a = std::get<std::vector<double>>(v);
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? ", " : "") << format_number(a[i]);
    os << ']';
  } else {
    os << '[';
    const auto& rows = std::get<std::vector<std::vector<double>>>(v);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        os << (j ? ", " : "") << format_number(rows[i][j]);
      os << ']';
    }
    os << ']';
  }
  return os.str();
}

}  // namespace

std::string to_json(const RunReport& r) {
  std::ostringstream os;
  os << "{\n  \"quantity\": \"" << json_escape(r.quantity) << "\",\n  \"inputs\": {";
  for (std::size_t i = 0; i < r.inputs.size(); ++i)
    os << (i ? ", " : "") << '"' << json_escape(r.inputs[i].first)
       << "\": " << scalar_json(r.inputs[i].second);
  os << "},\n  \"value\": " << value_json(r.value) << ",\n  \"units\": \""
     << json_escape(r.units) << "\",\n  \"checks\": [";
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    const auto& c = r.checks[i];
    os << (i ? ", " : "") << "{\"name\": \"" << json_escape(c.name)
       << "\", \"pass\": " << (c.pass ? "true" : "false")
       << ", \"residual\": " << format_number(c.residual) << "}";
  }
  os << "]";
  for (const auto& [key, val] : r.extras)
    os << ",\n  \"" << json_escape(key) << "\": " << value_json(val);
  os << ",\n  \"runtime_ms\": " << format_number(r.runtime_ms) << "\n}\n";
  return os.str();
}

std::string to_csv(const RunReport& r, const std::vector<std::string>& columns) {
  std::ostringstream os;
  if (!columns.empty()) {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
  }
  if (std::holds_alternative<double>(r.value)) {
    os << format_number(std::get<double>(r.value)) << '\n';
  } else if (std::holds_alternative<std::string>(r.value)) {
    os << std::get<std::string>(r.value) << '\n';
  } else if (std::holds_alternative<std::vector<double>>(r.value)) {
    for (double x : std::get<std::vector<double>>(r.value)) os << format_number(x) << '\n';
  } else {
    for (const auto& row : std::get<std::vector<std::vector<double>>>(r.value)) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << format_number(row[j]);
      os << '\n';
    }
  }
  for (const auto& c : r.checks)
    os << "# check " << c.name << " " << (c.pass ? "pass" : "fail")
       << " residual=" << format_number(c.residual) << '\n';
  for (const auto& [key, val] : r.extras) {
    if (std::holds_alternative<double>(val))
      os << "# " << key << " = " << format_number(std::get<double>(val)) << '\n';
    else if (std::holds_alternative<std::string>(val))
      os << "# " << key << " = " << std::get<std::string>(val) << '\n';
  }
  return os.str();
}

}  // namespace casimir
