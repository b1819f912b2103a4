#ifndef QEULER_RATIONAL_HPP
#define QEULER_RATIONAL_HPP

#include <concepts>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "qeuler/errors.hpp"

namespace qeuler {

using Integer = mpz_class;

// Exact fraction in lowest terms with positive denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T v) : v_(static_cast<long>(v)) {}

  Rational(const Integer& v) : v_(v) {}

  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ZeroDenominator();
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "a" or "a/b" with optional leading sign on a.
  static Rational parse(std::string_view s) {
    const auto slash = s.find('/');
    try {
      if (slash == std::string_view::npos) return Rational(Integer(std::string(s)));
      Integer num(std::string(s.substr(0, slash)));
      Integer den(std::string(s.substr(slash + 1)));
      return Rational(num, den);
    } catch (const std::invalid_argument&) {
      throw ParseError("not a rational number: '" + std::string(s) + "'");
    }
  }

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }
  const mpq_class& get() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // "a/b", or "a" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(raw(-v_)); }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(raw(1 / v_));
  }

  Rational pow(unsigned k) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), k);
    Rational r;
    r.v_.get_num() = n;
    r.v_.get_den() = d;
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  // Results of gmpxx arithmetic on canonical operands are already canonical.
  static Rational raw(const mpq_class& v) {
    Rational r;
    r.v_ = v;
    return r;
  }

  mpq_class v_{0};
};

}  // namespace qeuler

#endif  // QEULER_RATIONAL_HPP
