#ifndef QEULER_RATFUNC_HPP
#define QEULER_RATFUNC_HPP

#include <ostream>
#include <string>
#include <utility>

#include "qeuler/errors.hpp"
#include "qeuler/rational.hpp"
#include "qeuler/unipoly.hpp"

namespace qeuler {

// Element of Q(q) in canonical form: gcd(num, den) = 1 and den monic.
// Two values are equal exactly when their fields are identical.
class RatFuncQ {
 public:
  RatFuncQ() : den_(1) {}

  template <std::integral T>
  RatFuncQ(T c) : num_(c), den_(1) {}
  RatFuncQ(const Rational& c) : num_(c), den_(1) {}
  RatFuncQ(UniPolyQ p) : num_(std::move(p)), den_(1) {}

  static RatFuncQ canonical(const UniPolyQ& num, const UniPolyQ& den) {
    if (den.is_zero()) throw ZeroDenominator();
    if (num.is_zero()) return {};
    UniPolyQ g = gcd(num, den);
    UniPolyQ n = num.exact_div(g), d = den.exact_div(g);
    Rational l = d.lead();
    if (!l.is_one()) {
      Rational inv = l.inverse();
      n *= inv;
      d *= inv;
    }
    return RatFuncQ(std::move(n), std::move(d));
  }

  static RatFuncQ q() { return RatFuncQ(UniPolyQ::q()); }

  const UniPolyQ& num() const { return num_; }
  const UniPolyQ& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  Rational eval(const Rational& q0) const {
    Rational d = den_.eval(q0);
    if (d.is_zero()) throw PoleAtPoint(q0.str());
    return num_.eval(q0) / d;
  }

  RatFuncQ inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational l = num_.lead().inverse();
    return RatFuncQ(den_ * l, num_ * l);
  }

  RatFuncQ pow(unsigned k) const { return RatFuncQ(num_.pow(k), den_.pow(k)); }

  RatFuncQ operator-() const { return RatFuncQ(-num_, den_); }

  // Henrici's reduced addition: only gcd(t, g) has to be removed.
  friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      if (a.den_.is_one()) return RatFuncQ(a.num_ + b.num_, a.den_);
      return reduce(a.num_ + b.num_, a.den_);
    }
    if (a.den_.is_one()) return RatFuncQ(a.num_ * b.den_ + b.num_, b.den_);
    if (b.den_.is_one()) return RatFuncQ(a.num_ + b.num_ * a.den_, a.den_);
    UniPolyQ g = gcd(a.den_, b.den_);
    if (g.is_one()) return RatFuncQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    UniPolyQ ad = a.den_.exact_div(g), bd = b.den_.exact_div(g);
    UniPolyQ t = a.num_ * bd + b.num_ * ad;
    if (t.is_zero()) return {};
    UniPolyQ h = gcd(t, g);
    return RatFuncQ(t.exact_div(h), ad * b.den_.exact_div(h));
  }

  friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) { return a + (-b); }

  friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RatFuncQ(a.num_ * b.num_, a.den_);
    UniPolyQ g1 = gcd(a.num_, b.den_);
    UniPolyQ g2 = gcd(b.num_, a.den_);
    return RatFuncQ(a.num_.exact_div(g1) * b.num_.exact_div(g2),
                    a.den_.exact_div(g2) * b.den_.exact_div(g1));
  }

  friend RatFuncQ operator*(const RatFuncQ& a, const Rational& s) {
    if (s.is_zero()) return {};
    return RatFuncQ(a.num_ * s, a.den_);
  }
  friend RatFuncQ operator*(const Rational& s, const RatFuncQ& a) { return a * s; }

  friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) { return a * b.inverse(); }

  RatFuncQ& operator+=(const RatFuncQ& o) { return *this = *this + o; }
  RatFuncQ& operator-=(const RatFuncQ& o) { return *this = *this - o; }
  RatFuncQ& operator*=(const RatFuncQ& o) { return *this = *this * o; }
  RatFuncQ& operator/=(const RatFuncQ& o) { return *this = *this / o; }

  friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const RatFuncQ& f) { return os << f.str(); }

 private:
  // Trusted constructor: the caller guarantees canonical form.
  RatFuncQ(UniPolyQ n, UniPolyQ d) : num_(std::move(n)), den_(std::move(d)) {
    if (num_.is_zero()) den_ = UniPolyQ(1);
  }

  static RatFuncQ reduce(const UniPolyQ& n, const UniPolyQ& monic_den) {
    if (n.is_zero()) return {};
    UniPolyQ g = gcd(n, monic_den);
    return RatFuncQ(n.exact_div(g), monic_den.exact_div(g));
  }

  UniPolyQ num_;
  UniPolyQ den_;
};

}  // namespace qeuler

#endif  // QEULER_RATFUNC_HPP
