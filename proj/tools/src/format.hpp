#pragma once

#include <complex>
#include <cstdio>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "hbell/cyclotomic.hpp"
#include "hbell_cli/cli.hpp"

namespace hbell::cli {

using json = nlohmann::ordered_json;

inline double clean(double x) { return std::abs(x) < 1e-15 ? 0.0 : x; }

inline json complex_json(std::complex<double> z) { return json::array({clean(z.real()), clean(z.imag())}); }

inline json complex_array(std::span<const std::complex<double>> v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(complex_json(z));
  return a;
}

inline json exponents_json(std::span<const int> e) { return json(std::vector<int>(e.begin(), e.end())); }

inline json cyc_json(const CycNum& c) {
  return json(std::vector<std::int64_t>(c.coeffs().begin(), c.coeffs().end()));
}

inline std::string csv_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", clean(x));
  return buf;
}

inline std::string join_exponents(std::span<const int> e, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(e[i]);
  }
  return s;
}

inline std::string fixed(double x, int digits = 6) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, clean(x));
  return buf;
}

inline void json_line(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

}  // namespace hbell::cli
