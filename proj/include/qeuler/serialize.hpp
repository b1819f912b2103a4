#ifndef QEULER_SERIALIZE_HPP
#define QEULER_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "qeuler/degenerate.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/mpoly.hpp"
#include "qeuler/padic.hpp"
#include "qeuler/qseries.hpp"
#include "qeuler/ratfunc.hpp"

namespace qeuler {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return r.str(); }

inline Json to_json(const UniPolyQ& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

inline Json to_json(const RatFuncQ& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

inline Json to_json(const MPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json{{"dl", m.dl}, {"dx", m.dx}, {"c", to_json(c)}});
  return Json{{"terms", terms}};
}

inline Json to_json(const QSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
  return Json{{"K", s.order()}, {"coeffs", coeffs}};
}

inline Json to_json(const IdentityReport& rep) {
  Json j{{"identity", rep.identity}, {"n", rep.n}, {"r", rep.r}, {"pass", rep.pass}, {"residual", to_json(rep.residual)}};
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

inline Json to_json(const IntegrandSpec& s) {
  return Json{{"kind", integrand_kind_name(s.kind)}, {"n", s.n}, {"x", s.x}, {"lambda0", s.lambda0.str()}, {"r", s.r}};
}

inline Json to_json(const PadicReport& rep) {
  Json rows = Json::array();
  for (const auto& row : rep.rows)
    rows.push_back(Json{{"N", row.N}, {"valuation", row.valuation}, {"saturated", row.saturated}});
  Json j{{"check", rep.check}, {"spec", to_json(rep.spec)}, {"q0", rep.q0.str()}, {"p", rep.p}, {"M", rep.M},
         {"rows", rows}, {"pass", rep.pass}};
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

inline Json to_json(const RecurrenceReport& rep) {
  return Json{{"check", "finite_recurrence"},
              {"spec", to_json(rep.spec)},
              {"q0", rep.q0.str()},
              {"p", rep.p},
              {"M", rep.M},
              {"N", rep.N},
              {"identity_valuation", rep.identity_valuation},
              {"deviation_valuation", rep.deviation_valuation},
              {"pass", rep.pass}};
}

inline Json to_json(const SummabilityReport& rep) {
  Json vals = Json::array();
  for (const auto& v : rep.valuations) vals.push_back(v ? Json(*v) : Json(nullptr));
  return Json{{"n", rep.n},
              {"form", series_form_name(rep.form)},
              {"x", rep.x},
              {"lambda0", rep.lambda0.str()},
              {"valuations", vals},
              {"summable", rep.summable},
              {"note", rep.note}};
}

inline Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a string \"a/b\"");
  return Rational::parse(j.get<std::string>());
}

inline UniPolyQ unipoly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of rationals");
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return UniPolyQ(std::move(c));
}

// Accepts any num/den pair and canonicalizes it.
inline RatFuncQ ratfunc_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw ParseError("rational function must have \"num\" and \"den\"");
  return RatFuncQ::canonical(unipoly_from_json(j.at("num")), unipoly_from_json(j.at("den")));
}

inline MPoly mpoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms")) throw ParseError("polynomial must have \"terms\"");
  MPoly p;
  for (const auto& t : j.at("terms"))
    p.add_term(Monomial{t.at("dl").get<unsigned>(), t.at("dx").get<unsigned>()}, ratfunc_from_json(t.at("c")));
  return p;
}

inline QSeries qseries_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& e : j.at("coeffs")) c.push_back(rational_from_json(e));
  if (c.size() != j.at("K").get<std::size_t>()) throw ParseError("series length differs from K");
  return QSeries(std::move(c));
}

}  // namespace qeuler

#endif  // QEULER_SERIALIZE_HPP
