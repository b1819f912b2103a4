#ifndef QEULER_QSERIES_HPP
#define QEULER_QSERIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qeuler/combinatorics.hpp"
#include "qeuler/degenerate.hpp"
#include "qeuler/mpoly.hpp"
#include "qeuler/ratfunc.hpp"

namespace qeuler {

inline constexpr std::size_t default_series_order = 30;

// Power series in q known modulo q^K. coeffs().size() == K always.
class QSeries {
 public:
  explicit QSeries(std::size_t K) : c_(K) {}

  QSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

  static QSeries from_poly(const UniPolyQ& p, std::size_t K) {
    QSeries s(K);
    for (std::size_t i = 0; i < K && i < p.coeffs().size(); ++i) s.c_[i] = p.coeffs()[i];
    return s;
  }

  std::size_t order() const { return c_.size(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_.at(i); }

  // Index of the first nonzero coefficient; nullopt if zero modulo q^K.
  std::optional<std::size_t> valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return i;
    return std::nullopt;
  }

  bool is_zero() const { return !valuation(); }

  QSeries truncated(std::size_t K) const {
    QSeries r = *this;
    r.c_.resize(std::min(K, c_.size()));
    return r;
  }

  QSeries operator-() const {
    QSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }

  friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    const std::size_t K = std::min(a.order(), b.order());
    std::vector<mpq_class> acc(K);
    for (std::size_t i = 0; i < K; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < K; ++j)
        if (!b.c_[j].is_zero()) acc[i + j] += a.c_[i].get() * b.c_[j].get();
    }
    std::vector<Rational> out;
    out.reserve(K);
    for (auto& v : acc) out.emplace_back(v);
    return QSeries(std::move(out));
  }

  friend QSeries operator*(QSeries a, const Rational& s) {
    for (auto& c : a.c_) c *= s;
    return a;
  }

  QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  // Equality of the common known prefix.
  friend bool operator==(const QSeries& a, const QSeries& b) {
    const std::size_t K = std::min(a.order(), b.order());
    return std::equal(a.c_.begin(), a.c_.begin() + static_cast<std::ptrdiff_t>(K), b.c_.begin());
  }

 private:
  std::vector<Rational> c_;
};

// Power-series expansion of f modulo q^K.
inline QSeries qs_from_ratfunc(const RatFuncQ& f, std::size_t K) {
  const auto& den = f.den().coeffs();
  if (den.empty() || den[0].is_zero()) throw PoleAtZero();
  const mpq_class inv0 = 1 / den[0].get();
  std::vector<mpq_class> out(K);
  const auto& num = f.num().coeffs();
  for (std::size_t i = 0; i < K; ++i) {
    mpq_class v = i < num.size() ? num[i].get() : mpq_class(0);
    for (std::size_t j = 1; j <= i && j < den.size(); ++j)
      if (!den[j].is_zero()) v -= den[j].get() * out[i - j];
    out[i] = v * inv0;
  }
  std::vector<Rational> c;
  c.reserve(K);
  for (auto& v : out) c.emplace_back(v);
  return QSeries(std::move(c));
}

// ([k]_q)_{n,lambda0} = prod_{j<n} ([k]_q - j lambda0), a polynomial in q.
inline UniPolyQ deg_falling_bracket_poly(unsigned k, unsigned n, const Rational& lambda0) {
  const UniPolyQ bracket = qbracket_int(k);
  UniPolyQ r(1);
  for (unsigned j = 0; j < n; ++j) r *= bracket - UniPolyQ(lambda0 * Rational(j));
  return r;
}

// [2]_q^r sum_{m>=0} (-1)^m C(r+m-1, m) q^m ([x+m]_q)_{n,lambda0}, summed over
// m = 0..K and truncated to q^K. Term m is divisible by q^m, so the
// truncation is exact.
inline QSeries series_deg_qeuler_order(std::size_t n, unsigned r, unsigned x, const Rational& lambda0,
                                       std::size_t K) {
  if (r == 0) throw InvalidArgument("order r must be positive");
  if (K == 0) throw InvalidArgument("truncation order K must be positive");
  QSeries sum(K);
  for (std::size_t m = 0; m <= K; ++m) {
    Rational w(binomial(r + m - 1, static_cast<long>(m)));
    if (m % 2) w = -w;
    UniPolyQ term = UniPolyQ::monomial(w, m) *
                    deg_falling_bracket_poly(x + static_cast<unsigned>(m), static_cast<unsigned>(n), lambda0);
    sum += QSeries::from_poly(term, K);
  }
  return QSeries::from_poly(UniPolyQ{1, 1}.pow(r), K) * sum;
}

// Corrected series form [2]_q sum_m (-1)^m q^m ([x+m]_q)_{n,lambda0}.
inline QSeries series_deg_qeuler(std::size_t n, unsigned x, const Rational& lambda0, std::size_t K) {
  return series_deg_qeuler_order(n, 1, x, lambda0, K);
}

// Exact route: expansion of E^(r)_{n,q}(x|lambda0) with X = q^x.
inline QSeries exact_series_deg_qeuler_order(std::size_t n, unsigned r, unsigned x, const Rational& lambda0,
                                             std::size_t K) {
  const RatFuncQ value =
      specialize(deg_qeuler_order(n, r), q_power(x), RatFuncQ(lambda0)).constant_value();
  return qs_from_ratfunc(value, K);
}

enum class SeriesForm { literal_thm4, corrected };

inline const char* series_form_name(SeriesForm f) {
  return f == SeriesForm::literal_thm4 ? "literal_thm4" : "corrected";
}

// q-adic valuations of the individual series terms for m = 0..window.
struct SummabilityReport {
  std::size_t n = 0;
  SeriesForm form = SeriesForm::corrected;
  unsigned x = 0;
  Rational lambda0;
  std::vector<std::optional<std::size_t>> valuations;  // nullopt: the term is 0
  bool summable = false;
  std::string note;
};

// Term m of the literal form is (-1)^m [2]_q ([x+m+1]_q)_{n,lambda}; of the
// corrected form (-1)^m q^m [2]_q ([x+m]_q)_{n,lambda}. A series of
// polynomials is summable q-adically iff the term valuations tend to
// infinity. On the finite window this is judged by the second half of the
// window: every term there must have valuation at least window/2.
inline SummabilityReport summability_scan(std::size_t n, SeriesForm form, unsigned x = 0,
                                          const Rational& lambda0 = Rational(), std::size_t window = 20) {
  SummabilityReport rep;
  rep.n = n;
  rep.form = form;
  rep.x = x;
  rep.lambda0 = lambda0;
  const UniPolyQ two{1, 1};
  for (std::size_t m = 0; m <= window; ++m) {
    const auto mm = static_cast<unsigned>(m);
    UniPolyQ term = form == SeriesForm::literal_thm4
                        ? two * deg_falling_bracket_poly(x + mm + 1, static_cast<unsigned>(n), lambda0)
                        : UniPolyQ::monomial(1, m) * two *
                              deg_falling_bracket_poly(x + mm, static_cast<unsigned>(n), lambda0);
    if (m % 2) term = -term;
    const int v = term.valuation();
    rep.valuations.push_back(v < 0 ? std::nullopt : std::optional<std::size_t>(static_cast<std::size_t>(v)));
  }
  const std::size_t half = window / 2;
  rep.summable = true;
  for (std::size_t m = half; m <= window; ++m)
    if (rep.valuations[m] && *rep.valuations[m] < half) rep.summable = false;
  rep.note = rep.summable ? "term valuations grow without bound; the series converges q-adically"
                          : "term valuations stay bounded; the series does not converge q-adically";
  return rep;
}

}  // namespace qeuler

#endif  // QEULER_QSERIES_HPP
