#ifndef QEULER_UNIPOLY_HPP
#define QEULER_UNIPOLY_HPP

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qeuler/errors.hpp"
#include "qeuler/rational.hpp"

namespace qeuler {

// Dense univariate polynomial over Q. Index i holds the coefficient of q^i.
// The coefficient list never ends in zero; the zero polynomial is empty.
class UniPolyQ {
 public:
  UniPolyQ() = default;

  explicit UniPolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPolyQ(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  template <std::integral T>
  UniPolyQ(T c) : UniPolyQ(Rational(c)) {}

  UniPolyQ(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
  }

  static UniPolyQ monomial(const Rational& c, std::size_t k) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(k + 1);
    v[k] = c;
    UniPolyQ p;
    p.c_ = std::move(v);
    return p;
  }

  // The indeterminate q.
  static UniPolyQ q() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  const Rational& lead() const {
    assert(!is_zero());
    return c_.back();
  }

  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  // Lowest index with a nonzero coefficient; -1 for zero.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
  }

  Rational eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPolyQ monic() const {
    if (is_zero() || lead().is_one()) return *this;
    return *this * lead().inverse();
  }

  UniPolyQ operator-() const {
    UniPolyQ r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  UniPolyQ& operator+=(const UniPolyQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  UniPolyQ& operator-=(const UniPolyQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  UniPolyQ& operator*=(const Rational& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend UniPolyQ operator+(UniPolyQ a, const UniPolyQ& b) { return a += b; }
  friend UniPolyQ operator-(UniPolyQ a, const UniPolyQ& b) { return a -= b; }
  friend UniPolyQ operator*(UniPolyQ a, const Rational& s) { return a *= s; }
  friend UniPolyQ operator*(const Rational& s, UniPolyQ a) { return a *= s; }

  friend UniPolyQ operator*(const UniPolyQ& a, const UniPolyQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return b * a.c_[0];
    if (b.is_constant()) return a * b.c_[0];
    std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].get() * b.c_[j].get();
    }
    std::vector<Rational> out;
    out.reserve(acc.size());
    for (auto& v : acc) out.emplace_back(v);
    return UniPolyQ(std::move(out));
  }

  UniPolyQ& operator*=(const UniPolyQ& o) { return *this = *this * o; }

  UniPolyQ pow(unsigned k) const {
    UniPolyQ result(1), base = *this;
    while (k) {
      if (k & 1u) result *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return result;
  }

  // Composition with q -> s*q.
  UniPolyQ scale_variable(const Rational& s) const {
    UniPolyQ r = *this;
    Rational f = 1;
    for (auto& c : r.c_) {
      c *= f;
      f *= s;
    }
    r.trim();
    return r;
  }

  // Euclidean division over Q: *this = quot * d + rem, deg rem < deg d.
  std::pair<UniPolyQ, UniPolyQ> divrem(const UniPolyQ& d) const {
    if (d.is_zero()) throw DivisionByZero();
    if (degree() < d.degree()) return {UniPolyQ(), *this};
    std::vector<mpq_class> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(c.get());
    const std::size_t dn = d.c_.size() - 1;
    const mpq_class inv_lead = 1 / d.lead().get();
    std::vector<Rational> quot(c_.size() - dn);
    for (std::size_t i = c_.size(); i-- > dn;) {
      if (sgn(r[i]) == 0) continue;
      mpq_class f = r[i] * inv_lead;
      for (std::size_t j = 0; j < dn; ++j)
        if (!d.c_[j].is_zero()) r[i - dn + j] -= f * d.c_[j].get();
      r[i] = 0;
      quot[i - dn] = Rational(f);
    }
    r.resize(dn);
    std::vector<Rational> rem;
    rem.reserve(dn);
    for (auto& v : r) rem.emplace_back(v);
    return {UniPolyQ(std::move(quot)), UniPolyQ(std::move(rem))};
  }

  // Quotient of a division known to be exact.
  UniPolyQ exact_div(const UniPolyQ& d) const {
    if (d.is_one()) return *this;
    auto [quot, rem] = divrem(d);
    assert(rem.is_zero());
    return quot;
  }

  friend bool operator==(const UniPolyQ& a, const UniPolyQ& b) { return a.c_ == b.c_; }

  // Human-readable form in ascending powers, e.g. "1+q-1/2*q^3".
  std::string str(const std::string& var = "q") const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const Rational& c = c_[i];
      if (c.is_zero()) continue;
      std::string mag = (c.sign() < 0 ? -c : c).str();
      if (!s.empty() || c.sign() < 0) s += c.sign() < 0 ? "-" : "+";
      if (i == 0) {
        s += mag;
        continue;
      }
      if (mag != "1") s += mag + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const UniPolyQ& p) { return os << p.str(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

namespace detail {

using ZPoly = std::vector<Integer>;

inline void zpoly_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Divide out the content and make the leading coefficient positive.
inline void zpoly_make_primitive(ZPoly& p) {
  zpoly_trim(p);
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& c : p) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

inline ZPoly to_primitive_zpoly(const UniPolyQ& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get().get_den_mpz_t());
  }
  ZPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Integer v = c.get().get_num() * (l / c.get().get_den());
    out.push_back(std::move(v));
  }
  zpoly_make_primitive(out);
  return out;
}

// Pseudo-remainder: lc(b)^k * a mod b, computed in place on a.
inline void zpoly_prem(ZPoly& a, const ZPoly& b) {
  const std::size_t bn = b.size() - 1;
  const Integer& lc = b.back();
  while (!a.empty() && a.size() - 1 >= bn) {
    const std::size_t an = a.size() - 1;
    Integer f = a.back();
    const std::size_t shift = an - bn;
    if (lc != 1)
      for (std::size_t j = 0; j < an; ++j) a[j] *= lc;
    for (std::size_t j = 0; j < bn; ++j) {
      if (b[j] == 0) continue;
      a[shift + j] -= f * b[j];
    }
    a.pop_back();
    zpoly_trim(a);
  }
}

}  // namespace detail

// Monic greatest common divisor; gcd(0, 0) = 0.
inline UniPolyQ gcd(const UniPolyQ& a, const UniPolyQ& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return UniPolyQ(1);
  detail::ZPoly x = detail::to_primitive_zpoly(a);
  detail::ZPoly y = detail::to_primitive_zpoly(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return UniPolyQ(1);
    detail::zpoly_prem(x, y);
    detail::zpoly_make_primitive(x);
    std::swap(x, y);
  }
  std::vector<Rational> out;
  out.reserve(x.size());
  for (auto& c : x) out.emplace_back(c, x.back());
  return UniPolyQ(std::move(out));
}

}  // namespace qeuler

#endif  // QEULER_UNIPOLY_HPP
