#ifndef QEULER_QEULER_CORE_HPP
#define QEULER_QEULER_CORE_HPP

#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "qeuler/combinatorics.hpp"
#include "qeuler/mpoly.hpp"
#include "qeuler/ratfunc.hpp"
#include "qeuler/unipoly.hpp"

namespace qeuler {

// [2]_q = 1 + q.
inline RatFuncQ qtwo() { return RatFuncQ(UniPolyQ{1, 1}); }

// 1 + q^k
inline RatFuncQ one_plus_q_power(unsigned k) {
  return RatFuncQ(UniPolyQ(1) + UniPolyQ::monomial(1, k));
}

// Classical Euler numbers E_n, from (E + 1)^n + E_n = 2 delta_{0,n}.
class ClassicalEulerSeq {
 public:
  static ClassicalEulerSeq build(std::size_t n_max) {
    ClassicalEulerSeq s;
    s.values_.reserve(n_max + 1);
    s.values_.emplace_back(1);
    for (std::size_t n = 1; n <= n_max; ++n) {
      Rational acc;
      for (std::size_t l = 0; l < n; ++l) acc += Rational(binomial(n, static_cast<long>(l))) * s.values_[l];
      s.values_.push_back(-acc / Rational(2));
    }
    return s;
  }

  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t n) const { return values_.at(n); }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<Rational> values_;
};

inline Rational classical_euler_number(std::size_t n) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard lock(mu);
  if (cache.size() <= n) cache = ClassicalEulerSeq::build(n).values();
  return cache[n];
}

// E_n(x) = sum_k C(n,k) E_k x^(n-k), as a polynomial in x.
inline UniPolyQ classical_euler_poly(std::size_t n) {
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    c[n - k] = Rational(binomial(n, static_cast<long>(k))) * classical_euler_number(k);
  return UniPolyQ(std::move(c));
}

// q * sum_{l=0}^{n} C(n,l) q^l E_l + E_n: the Carlitz recurrence with the umbral
// powers expanded. Vanishes for n >= 1.
inline RatFuncQ carlitz_recurrence_residual(const std::vector<RatFuncQ>& e, std::size_t n) {
  RatFuncQ acc;
  for (std::size_t l = 0; l <= n; ++l)
    acc += RatFuncQ(UniPolyQ::monomial(Rational(binomial(n, static_cast<long>(l))), l)) * e.at(l);
  return RatFuncQ::q() * acc + e.at(n);
}

// Carlitz q-Euler numbers E_{0,q}, ..., E_{n_max,q}. Each entry is checked
// against the recurrence when the sequence is built.
class QEulerNumberSeq {
 public:
  static QEulerNumberSeq build(std::size_t n_max) {
    QEulerNumberSeq s;
    s.values_.reserve(n_max + 1);
    s.values_.emplace_back(1);
    for (std::size_t n = 1; n <= n_max; ++n) {
      RatFuncQ acc;
      for (std::size_t l = 0; l < n; ++l)
        acc += RatFuncQ(UniPolyQ::monomial(Rational(binomial(n, static_cast<long>(l))), l)) * s.values_[l];
      s.values_.push_back(-(RatFuncQ::q() * acc) / one_plus_q_power(static_cast<unsigned>(n + 1)));
      if (!carlitz_recurrence_residual(s.values_, n).is_zero())
        throw std::logic_error("q-Euler number " + std::to_string(n) + " violates its recurrence");
    }
    return s;
  }

  const std::vector<RatFuncQ>& values() const { return values_; }
  const RatFuncQ& operator[](std::size_t n) const { return values_.at(n); }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<RatFuncQ> values_;
};

inline RatFuncQ qeuler_number(std::size_t n) {
  static std::mutex mu;
  static std::vector<RatFuncQ> cache{RatFuncQ(1)};
  std::lock_guard lock(mu);
  if (cache.size() <= n) cache = QEulerNumberSeq::build(n).values();
  return cache[n];
}

// E_{n,q}(x) = sum_l C(n,l) q^(lx) E_{l,q} [x]_q^(n-l).
inline MPoly qeuler_poly(std::size_t n) {
  const MPoly bracket = qbracket_sym();
  std::vector<MPoly> bracket_pow{MPoly(1)};
  for (std::size_t k = 1; k <= n; ++k) bracket_pow.push_back(bracket_pow.back() * bracket);
  MPoly r;
  for (std::size_t l = 0; l <= n; ++l) {
    const RatFuncQ c = qeuler_number(l) * Rational(binomial(n, static_cast<long>(l)));
    r += MPoly::monomial(c, 0, static_cast<unsigned>(l)) * bracket_pow[n - l];
  }
  return r;
}

// [2]_q^r / (1-q)^n * sum_l C(n,l) (-1)^l q^(lx) / (1 + q^(l+1))^r.
inline MPoly qeuler_poly_order(std::size_t n, unsigned r) {
  if (r == 0) throw InvalidArgument("order r must be positive");
  const RatFuncQ prefactor = qtwo().pow(r) / RatFuncQ(UniPolyQ{1, -1}).pow(static_cast<unsigned>(n));
  MPoly p;
  for (std::size_t l = 0; l <= n; ++l) {
    Rational c(binomial(n, static_cast<long>(l)));
    if (l % 2) c = -c;
    const RatFuncQ term = prefactor * one_plus_q_power(static_cast<unsigned>(l + 1)).pow(r).inverse() * c;
    p.add_term(Monomial{0, static_cast<unsigned>(l)}, term);
  }
  return p;
}

// The finite closed form [2]_q / (1-q)^n * sum_l C(n,l) (-1)^l q^(lx) / (1 + q^(l+1)).
inline MPoly qeuler_poly_explicit(std::size_t n) { return qeuler_poly_order(n, 1); }

}  // namespace qeuler

#endif  // QEULER_QEULER_CORE_HPP
