#ifndef QEULER_MPOLY_HPP
#define QEULER_MPOLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qeuler/errors.hpp"
#include "qeuler/ratfunc.hpp"

namespace qeuler {

// Exponent pair (degree in lambda, degree in X). Ordered lexicographically.
struct Monomial {
  unsigned dl = 0;
  unsigned dx = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Sparse polynomial in lambda and X = q^x with coefficients in Q(q).
// Zero coefficients are never stored.
class MPoly {
 public:
  using TermMap = std::map<Monomial, RatFuncQ>;

  MPoly() = default;

  template <std::integral T>
  MPoly(T c) : MPoly(RatFuncQ(c)) {}
  MPoly(const Rational& c) : MPoly(RatFuncQ(c)) {}
  MPoly(const RatFuncQ& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
  }

  static MPoly monomial(const RatFuncQ& c, unsigned dl, unsigned dx) {
    MPoly p;
    if (!c.is_zero()) p.terms_.emplace(Monomial{dl, dx}, c);
    return p;
  }

  static MPoly lambda() { return monomial(1, 1, 0); }
  static MPoly X() { return monomial(1, 0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
  }

  RatFuncQ coeff(unsigned dl, unsigned dx) const {
    auto it = terms_.find(Monomial{dl, dx});
    return it == terms_.end() ? RatFuncQ() : it->second;
  }

  // The Q(q) value of a polynomial with no lambda or X left.
  RatFuncQ constant_value() const {
    if (!is_constant()) throw InvalidArgument("polynomial still depends on lambda or X: " + str());
    return coeff(0, 0);
  }

  // -1 for the zero polynomial.
  int lambda_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.dl));
    return d;
  }

  int x_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.dx));
    return d;
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  MPoly& operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  MPoly& operator*=(const RatFuncQ& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const RatFuncQ& s) { return a *= s; }
  friend MPoly operator*(const RatFuncQ& s, MPoly a) { return a *= s; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(Monomial{ma.dl + mb.dl, ma.dx + mb.dx}, ca * cb);
    return r;
  }

  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  // c * lambda^dl * X^dx * (*this) without going through the general product.
  MPoly times_monomial(const RatFuncQ& c, unsigned dl, unsigned dx) const {
    MPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_)
      r.terms_.emplace_hint(r.terms_.end(), Monomial{m.dl + dl, m.dx + dx}, c.is_one() ? v : v * c);
    return r;
  }

  MPoly pow(unsigned k) const {
    MPoly result(1), base = *this;
    while (k) {
      if (k & 1u) result *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return result;
  }

  // Adds c * lambda^dl * X^dx.
  void add_term(const Monomial& m, const RatFuncQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "[" + c.str() + "]";
      if (m.dl) s += "*L" + (m.dl > 1 ? "^" + std::to_string(m.dl) : std::string());
      if (m.dx) s += "*X" + (m.dx > 1 ? "^" + std::to_string(m.dx) : std::string());
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

 private:
  TermMap terms_;
};

// [x]_q at a nonnegative integer: 1 + q + ... + q^(x-1).
inline UniPolyQ qbracket_int(unsigned x) {
  return UniPolyQ(std::vector<Rational>(x, Rational(1)));
}

// [x]_q = (1 - q^x)/(1 - q) written in X = q^x.
inline MPoly qbracket_sym() {
  const RatFuncQ c = RatFuncQ(UniPolyQ{1, -1}).inverse();
  return MPoly(c) - MPoly::monomial(c, 0, 1);
}

// x -> x + 1, i.e. X -> qX.
inline MPoly shift_x(const MPoly& p) {
  MPoly r;
  for (const auto& [m, c] : p.terms())
    r.add_term(m, m.dx ? c * RatFuncQ(UniPolyQ::monomial(1, m.dx)) : c);
  return r;
}

// a (a - lambda) (a - 2 lambda) ... (a - (n-1) lambda); 1 for n = 0.
inline MPoly deg_falling(const MPoly& a, unsigned n) {
  MPoly r(1);
  for (unsigned j = 0; j < n; ++j) r *= a - MPoly::monomial(Rational(j), 1, 0);
  return r;
}

// Substitutes the provided values for X and/or lambda.
inline MPoly specialize(const MPoly& p, const std::optional<RatFuncQ>& x0,
                        const std::optional<RatFuncQ>& lambda0) {
  if (!x0 && !lambda0) return p;
  std::vector<RatFuncQ> xpow, lpow;
  auto power = [](std::vector<RatFuncQ>& cache, const RatFuncQ& base, unsigned k) -> const RatFuncQ& {
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= k) cache.push_back(cache.back() * base);
    return cache[k];
  };
  MPoly r;
  for (const auto& [m, c] : p.terms()) {
    RatFuncQ coeff = c;
    Monomial key = m;
    if (x0) {
      if (m.dx) coeff *= power(xpow, *x0, m.dx);
      key.dx = 0;
    }
    if (lambda0) {
      if (m.dl) coeff *= power(lpow, *lambda0, m.dl);
      key.dl = 0;
    }
    r.add_term(key, coeff);
  }
  return r;
}

// q^k as an element of Q(q); the X value that encodes x = k.
inline RatFuncQ q_power(unsigned k) { return RatFuncQ(UniPolyQ::monomial(1, k)); }

}  // namespace qeuler

#endif  // QEULER_MPOLY_HPP
