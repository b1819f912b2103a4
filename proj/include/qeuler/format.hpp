#ifndef QEULER_FORMAT_HPP
#define QEULER_FORMAT_HPP

#include <cstddef>
#include <sstream>
#include <string>

#include "qeuler/errors.hpp"
#include "qeuler/rational.hpp"
#include "qeuler/serialize.hpp"

// Text, CSV and LaTeX renderings. All of them read the canonical JSON form,
// so they cannot disagree with the JSON output.
namespace qeuler::format {

enum class Output { json, csv, latex, text };

inline Output parse_output(const std::string& s) {
  if (s == "json") return Output::json;
  if (s == "csv") return Output::csv;
  if (s == "latex") return Output::latex;
  if (s == "text") return Output::text;
  throw InvalidArgument("unknown output format '" + s + "'");
}

namespace detail {

inline std::string power_text(std::size_t i, const std::string& var) {
  if (i == 0) return "";
  return i == 1 ? var : var + "^" + std::to_string(i);
}

// Ascending-power polynomial from a JSON coefficient array.
inline std::string poly_text(const Json& coeffs, const std::string& var = "q") {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational c = rational_from_json(coeffs[i]);
    if (c.is_zero()) continue;
    const std::string mag = (c.sign() < 0 ? -c : c).str();
    if (!s.empty() || c.sign() < 0) s += c.sign() < 0 ? "-" : "+";
    if (i == 0)
      s += mag;
    else
      s += (mag == "1" ? "" : mag + "*") + power_text(i, var);
  }
  return s.empty() ? "0" : s;
}

inline std::string rational_latex(const Rational& c) {
  if (c.is_integer()) return c.str();
  return "\\frac{" + c.numerator().get_str() + "}{" + c.denominator().get_str() + "}";
}

inline std::string poly_latex(const Json& coeffs, const std::string& var = "q") {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational c = rational_from_json(coeffs[i]);
    if (c.is_zero()) continue;
    const Rational mag = c.sign() < 0 ? -c : c;
    if (!s.empty())
      s += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0)
      s += "-";
    std::string pw = i == 0 ? "" : (i == 1 ? var : var + "^{" + std::to_string(i) + "}");
    if (i == 0)
      s += rational_latex(mag);
    else
      s += (mag.is_one() ? "" : rational_latex(mag) + " ") + pw;
  }
  return s.empty() ? "0" : s;
}

inline bool is_unit_den(const Json& den) { return den.size() == 1 && den[0] == "1"; }

}  // namespace detail

// Plain-text rendering of a Rational string, polynomial-in-x array, RatFuncQ
// object or MPoly object.
inline std::string value_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) return detail::poly_text(v, "x");
  if (v.contains("num")) {
    const std::string num = detail::poly_text(v.at("num"));
    if (detail::is_unit_den(v.at("den"))) return num;
    return "(" + num + ")/(" + detail::poly_text(v.at("den")) + ")";
  }
  if (v.contains("terms")) {
    std::string s;
    for (const auto& t : v.at("terms")) {
      if (!s.empty()) s += " + ";
      s += "[" + value_text(t.at("c")) + "]";
      const auto dl = t.at("dl").get<std::size_t>(), dx = t.at("dx").get<std::size_t>();
      if (dl) s += "*" + detail::power_text(dl, "L");
      if (dx) s += "*" + detail::power_text(dx, "X");
    }
    return s.empty() ? "0" : s;
  }
  throw ParseError("unrecognized value shape");
}

inline std::string value_latex(const Json& v) {
  if (v.is_string()) return detail::rational_latex(rational_from_json(v));
  if (v.is_array()) return detail::poly_latex(v, "x");
  if (v.contains("num")) {
    const std::string num = detail::poly_latex(v.at("num"));
    if (detail::is_unit_den(v.at("den"))) return num;
    return "\\frac{" + num + "}{" + detail::poly_latex(v.at("den")) + "}";
  }
  if (v.contains("terms")) {
    std::string s;
    for (const auto& t : v.at("terms")) {
      if (!s.empty()) s += " + ";
      s += "\\left(" + value_latex(t.at("c")) + "\\right)";
      const auto dl = t.at("dl").get<std::size_t>(), dx = t.at("dx").get<std::size_t>();
      if (dl) s += dl == 1 ? " \\lambda" : " \\lambda^{" + std::to_string(dl) + "}";
      if (dx) s += dx == 1 ? " X" : " X^{" + std::to_string(dx) + "}";
    }
    return s.empty() ? "0" : s;
  }
  throw ParseError("unrecognized value shape");
}

namespace detail {

inline void csv_poly(std::ostringstream& os, std::size_t n, std::size_t dl, std::size_t dx, const char* part,
                     const Json& coeffs) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == "0") continue;
    os << n << ',' << dl << ',' << dx << ',' << part << ',' << i << ',' << coeffs[i].get<std::string>() << '\n';
  }
}

inline void csv_value(std::ostringstream& os, std::size_t n, std::size_t dl, std::size_t dx, const Json& v) {
  if (v.is_string()) {
    if (v != "0") os << n << ',' << dl << ',' << dx << ",num,0," << v.get<std::string>() << '\n';
    return;
  }
  if (v.is_array()) {
    csv_poly(os, n, dl, dx, "num", v);
    return;
  }
  if (v.contains("num")) {
    csv_poly(os, n, dl, dx, "num", v.at("num"));
    csv_poly(os, n, dl, dx, "den", v.at("den"));
    return;
  }
  for (const auto& t : v.at("terms"))
    csv_value(os, n, t.at("dl").get<std::size_t>(), t.at("dx").get<std::size_t>(), t.at("c"));
}

}  // namespace detail

// Renders a table: a JSON array whose entry n is the n-th value.
inline std::string render_table(const Json& table, Output out) {
  std::ostringstream os;
  switch (out) {
    case Output::json:
      os << table.dump(2) << '\n';
      break;
    case Output::text:
      for (std::size_t n = 0; n < table.size(); ++n) os << n << ": " << value_text(table[n]) << '\n';
      break;
    case Output::csv:
      os << "n,dl,dx,part,power,coeff\n";
      for (std::size_t n = 0; n < table.size(); ++n) detail::csv_value(os, n, 0, 0, table[n]);
      break;
    case Output::latex:
      os << "\\begin{align*}\n";
      for (std::size_t n = 0; n < table.size(); ++n)
        os << "T_{" << n << "} &= " << value_latex(table[n]) << (n + 1 < table.size() ? " \\\\" : "") << '\n';
      os << "\\end{align*}\n";
      break;
  }
  return os.str();
}

}  // namespace qeuler::format

#endif  // QEULER_FORMAT_HPP
