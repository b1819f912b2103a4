#ifndef QEULER_VERIFY_HPP
#define QEULER_VERIFY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qeuler/combinatorics.hpp"
#include "qeuler/degenerate.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/padic.hpp"
#include "qeuler/qeuler_core.hpp"
#include "qeuler/qseries.hpp"
#include "qeuler/serialize.hpp"

// Identity suites behind `qeuler verify`.
namespace qeuler::verify {

enum class Identity { thm1, thm2, thm4, thm5, thm6, thm7, thm8, thm9, eq17, limits };

inline constexpr std::array<Identity, 10> all_identities{Identity::thm1, Identity::thm2, Identity::thm4,
                                                         Identity::thm5, Identity::thm6, Identity::thm7,
                                                         Identity::thm8, Identity::thm9, Identity::eq17,
                                                         Identity::limits};

inline std::string_view name(Identity id) {
  switch (id) {
    case Identity::thm1: return "thm1";
    case Identity::thm2: return "thm2";
    case Identity::thm4: return "thm4";
    case Identity::thm5: return "thm5";
    case Identity::thm6: return "thm6";
    case Identity::thm7: return "thm7";
    case Identity::thm8: return "thm8";
    case Identity::thm9: return "thm9";
    case Identity::eq17: return "eq17";
    case Identity::limits: return "limits";
  }
  return "?";
}

inline Identity parse_identity(std::string_view s) {
  for (Identity id : all_identities)
    if (name(id) == s) return id;
  throw InvalidArgument("unknown identity '" + std::string(s) + "'");
}

struct Config {
  std::size_t n_max = 8;
  unsigned r_max = 3;
  std::size_t K = default_series_order;
  bool literal = false;  // also scan the printed (uncorrected) series form
  std::uint64_t p = 3;
  Rational q0 = 4;
  unsigned N_max = 4;
  std::uint64_t budget = default_term_budget;
};

struct CheckRecord {
  std::string identity;
  std::size_t n = 0;
  unsigned r = 1;
  bool pass = false;
  Json residual;
  std::string note;
  // A known misprint in the source formula, reported but not a failure.
  bool documented_discrepancy = false;
};

inline Json to_json(const CheckRecord& c) {
  Json j{{"identity", c.identity}, {"n", c.n}, {"r", c.r}, {"pass", c.pass}, {"residual", c.residual}};
  if (!c.note.empty()) j["note"] = c.note;
  if (c.documented_discrepancy) j["documented_discrepancy"] = true;
  return j;
}

namespace detail {

inline CheckRecord symbolic(std::string_view id, std::size_t n, unsigned r, const MPoly& residual,
                            std::string note = {}) {
  return CheckRecord{std::string(id), n, r, residual.is_zero(), qeuler::to_json(residual), std::move(note), false};
}

inline CheckRecord series(std::string_view id, std::size_t n, unsigned r, const QSeries& a, const QSeries& b,
                          std::string note) {
  const QSeries diff = a - b;
  return CheckRecord{std::string(id), n, r, diff.is_zero(), qeuler::to_json(diff), std::move(note), false};
}

inline const std::array<Rational, 3> thm4_lambdas{Rational(0), Rational(1), Rational(1, 2)};

inline std::string grid_note(unsigned x, const Rational& lambda0) {
  return "x=" + std::to_string(x) + " lambda=" + lambda0.str();
}

}  // namespace detail

inline std::vector<CheckRecord> run(Identity id, const Config& cfg) {
  std::vector<CheckRecord> out;
  const std::string_view tag = name(id);
  switch (id) {
    case Identity::thm1: {
      // The S1 expansion of the degenerate falling factorial that turns the
      // generating function into the S1 transform.
      for (std::size_t n = 0; n <= cfg.n_max; ++n) {
        MPoly expansion;
        for (std::size_t m = 0; m <= n; ++m)
          expansion.add_term(Monomial{static_cast<unsigned>(n - m), static_cast<unsigned>(m)},
                             RatFuncQ(Rational(stirling1(n, m))));
        MPoly residual = deg_falling(MPoly::X(), static_cast<unsigned>(n)) - expansion;
        const MPoly e = deg_qeuler_poly(n);
        std::string note;
        if (n >= 1 && e.lambda_degree() > static_cast<int>(n) - 1) {
          note = "lambda degree exceeds n-1";
          residual += e;
        }
        out.push_back(detail::symbolic(tag, n, 1, residual, note));
      }
      break;
    }
    case Identity::thm2: {
      const auto family = deg_qeuler_order_list(cfg.n_max, 1);
      for (std::size_t n = 0; n <= cfg.n_max; ++n) {
        try {
          out.push_back(detail::symbolic(tag, n, 1, s2_transform(family, n) - qeuler_poly(n)));
        } catch (const LambdaResidue& e) {
          out.push_back(CheckRecord{std::string(tag), n, 1, false, Json(nullptr), e.what(), false});
        }
      }
      break;
    }
    case Identity::thm4: {
      for (std::size_t n = 0; n <= cfg.n_max; ++n)
        for (unsigned x = 0; x <= 2; ++x)
          for (const Rational& lambda0 : detail::thm4_lambdas)
            out.push_back(detail::series(tag, n, 1, series_deg_qeuler(n, x, lambda0, cfg.K),
                                         exact_series_deg_qeuler_order(n, 1, x, lambda0, cfg.K),
                                         "corrected series, " + detail::grid_note(x, lambda0)));
      if (cfg.literal) {
        const SummabilityReport literal = summability_scan(0, SeriesForm::literal_thm4);
        CheckRecord rec{std::string(tag), 0, 1, !literal.summable, qeuler::to_json(literal),
                        literal.summable ? "literal form unexpectedly summable at n=0"
                                         : "literal form non-summable at n=0; corrected form verified",
                        true};
        out.push_back(std::move(rec));
      }
      break;
    }
    case Identity::thm5:
      for (std::size_t n = 0; n <= cfg.n_max; ++n)
        out.push_back(detail::symbolic(tag, n, 1, deg_qeuler_poly_direct(n) - deg_qeuler_poly(n)));
      break;
    case Identity::thm6:
      for (std::size_t n = 0; n <= cfg.n_max; ++n) {
        IdentityReport rep = check_thm6(n);
        out.push_back(detail::symbolic(tag, n, 1, rep.residual));
      }
      break;
    case Identity::thm7:
      for (unsigned r = 1; r <= cfg.r_max; ++r)
        for (std::size_t n = 0; n <= cfg.n_max; ++n)
          for (unsigned x = 0; x <= 1; ++x)
            for (int l = 0; l <= 1; ++l)
              out.push_back(detail::series(tag, n, r, series_deg_qeuler_order(n, r, x, Rational(l), cfg.K),
                                           exact_series_deg_qeuler_order(n, r, x, Rational(l), cfg.K),
                                           detail::grid_note(x, Rational(l))));
      break;
    case Identity::thm8: {
      // r-fold fermionic integral of the degenerate falling factorial against
      // the symbolic order-r family.
      const unsigned M = cfg.N_max + 6;
      for (unsigned r = 2; r <= cfg.r_max; ++r)
        for (std::size_t n = 0; n <= std::min<std::size_t>(cfg.n_max, 3); ++n)
          for (unsigned x = 0; x <= 1; ++x)
            for (int l = 0; l <= 1; ++l) {
              IntegrandSpec spec{IntegrandKind::deg_falling_bracket, static_cast<unsigned>(n), x, Rational(l), r};
              PadicReport rep = convergence_report(spec, cfg.q0, 1, cfg.N_max, cfg.p, M, cfg.budget);
              bool pass = true;
              for (const auto& row : rep.rows)
                if (row.valuation + 1 < row.N) pass = false;
              out.push_back(CheckRecord{std::string(tag), n, r, pass, qeuler::to_json(rep),
                                        "p-adic r-fold integral, valuation >= N-1, " + detail::grid_note(x, Rational(l)),
                                        false});
            }
      break;
    }
    case Identity::thm9:
      for (unsigned r = 1; r <= cfg.r_max; ++r) {
        const auto family = deg_qeuler_order_list(cfg.n_max, r);
        for (std::size_t n = 0; n <= cfg.n_max; ++n) {
          try {
            out.push_back(detail::symbolic(tag, n, r, s2_transform(family, n) - qeuler_poly_order(n, r)));
          } catch (const LambdaResidue& e) {
            out.push_back(CheckRecord{std::string(tag), n, r, false, Json(nullptr), e.what(), false});
          }
        }
      }
      break;
    case Identity::eq17:
      for (std::size_t n = 0; n <= cfg.n_max; ++n)
        out.push_back(detail::symbolic(tag, n, 1, qeuler_poly(n) - qeuler_poly_explicit(n)));
      break;
    case Identity::limits:
      for (std::size_t n = 0; n <= cfg.n_max; ++n) {
        out.push_back(detail::symbolic(tag, n, 1,
                                       specialize(deg_qeuler_poly(n), std::nullopt, RatFuncQ(0)) - qeuler_poly(n),
                                       "lambda -> 0"));
        const MPoly e = qeuler_poly(n);
        const UniPolyQ classical = classical_euler_poly(n);
        Json diffs = Json::array();
        bool ok = true;
        for (unsigned x0 = 0; x0 <= 5; ++x0) {
          const Rational at_one = specialize(e, q_power(x0), std::nullopt).constant_value().eval(1);
          const Rational d = at_one - classical.eval(x0);
          ok = ok && d.is_zero();
          diffs.push_back(d.str());
        }
        out.push_back(CheckRecord{std::string(tag), n, 1, ok, diffs, "q -> 1 at x = 0..5 against E_n(x)", false});
        const MPoly bracket = qbracket_sym();
        MPoly ordinary;
        for (std::size_t m = 0; m <= n; ++m) ordinary += bracket.pow(static_cast<unsigned>(m)) * RatFuncQ(Rational(stirling1(n, m)));
        out.push_back(detail::symbolic(
            tag, n, 1, specialize(deg_falling(bracket, static_cast<unsigned>(n)), std::nullopt, RatFuncQ(1)) - ordinary,
            "lambda = 1 falling factorial"));
      }
      break;
  }
  return out;
}

}  // namespace qeuler::verify

#endif  // QEULER_VERIFY_HPP
