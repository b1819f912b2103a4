#ifndef QEULER_PADIC_HPP
#define QEULER_PADIC_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "qeuler/degenerate.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/mpoly.hpp"
#include "qeuler/qeuler_core.hpp"
#include "qeuler/rational.hpp"

namespace qeuler {

inline bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

namespace detail {

// p^e, or 0 if it does not fit below 2^62.
inline std::uint64_t checked_power(std::uint64_t p, unsigned e) {
  constexpr std::uint64_t limit = std::uint64_t{1} << 62;
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > limit / p) return 0;
    r *= p;
  }
  return r;
}

}  // namespace detail

// Element of Z/p^M, read as a p-adic integer known to precision M.
class PadicInt {
 public:
  PadicInt(std::uint64_t p, unsigned M, std::uint64_t residue = 0) : p_(p), M_(M) {
    if (!is_odd_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not an odd prime");
    if (M == 0) throw InvalidArgument("precision M must be positive");
    mod_ = detail::checked_power(p, M);
    if (mod_ == 0) throw InvalidArgument("p^M does not fit in 62 bits");
    r_ = residue % mod_;
  }

  std::uint64_t prime() const { return p_; }
  unsigned precision() const { return M_; }
  std::uint64_t modulus() const { return mod_; }
  std::uint64_t residue() const { return r_; }

  bool is_zero() const { return r_ == 0; }
  bool is_unit() const { return r_ % p_ != 0; }

  // Largest v <= M with p^v | residue; M means zero at this precision.
  unsigned valuation() const {
    if (r_ == 0) return M_;
    unsigned v = 0;
    for (std::uint64_t x = r_; x % p_ == 0; x /= p_) ++v;
    return v;
  }

  PadicInt operator-() const { return with(r_ == 0 ? 0 : mod_ - r_); }

  friend PadicInt operator+(const PadicInt& a, const PadicInt& b) {
    a.check_compatible(b);
    std::uint64_t s = a.r_ + b.r_;
    if (s >= a.mod_) s -= a.mod_;
    return a.with(s);
  }

  friend PadicInt operator-(const PadicInt& a, const PadicInt& b) { return a + (-b); }

  friend PadicInt operator*(const PadicInt& a, const PadicInt& b) {
    a.check_compatible(b);
    return a.with(static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.r_) * b.r_) % a.mod_));
  }

  PadicInt& operator+=(const PadicInt& o) { return *this = *this + o; }
  PadicInt& operator-=(const PadicInt& o) { return *this = *this - o; }
  PadicInt& operator*=(const PadicInt& o) { return *this = *this * o; }

  PadicInt pow(std::uint64_t k) const {
    PadicInt result = with(1 % mod_), base = *this;
    while (k) {
      if (k & 1u) result *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return result;
  }

  PadicInt inverse() const {
    if (!is_unit())
      throw DenominatorNotUnit("residue " + std::to_string(r_) + " is not a unit mod " + std::to_string(p_));
    // extended Euclid on signed 128-bit values
    __int128 old_r = r_, r = mod_, old_s = 1, s = 0;
    while (r != 0) {
      const __int128 quot = old_r / r;
      __int128 t = old_r - quot * r;
      old_r = r;
      r = t;
      t = old_s - quot * s;
      old_s = s;
      s = t;
    }
    __int128 inv = old_s % static_cast<__int128>(mod_);
    if (inv < 0) inv += mod_;
    return with(static_cast<std::uint64_t>(inv));
  }

  friend bool operator==(const PadicInt& a, const PadicInt& b) {
    return a.p_ == b.p_ && a.M_ == b.M_ && a.r_ == b.r_;
  }

 private:
  PadicInt with(std::uint64_t r) const {
    PadicInt x = *this;
    x.r_ = r;
    return x;
  }

  void check_compatible(const PadicInt& o) const {
    if (p_ != o.p_ || M_ != o.M_) throw InvalidArgument("p-adic operands differ in prime or precision");
  }

  std::uint64_t p_;
  unsigned M_;
  std::uint64_t mod_ = 1;
  std::uint64_t r_ = 0;
};

inline PadicInt padic_from_integer(const Integer& a, std::uint64_t p, unsigned M) {
  PadicInt zero(p, M);
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), zero.modulus());
  return PadicInt(p, M, r.get_ui());
}

inline PadicInt padic_from_rational(const Rational& a, std::uint64_t p, unsigned M) {
  PadicInt den = padic_from_integer(a.denominator(), p, M);
  if (!den.is_unit())
    throw DenominatorNotUnit("denominator of " + a.str() + " is divisible by " + std::to_string(p));
  return padic_from_integer(a.numerator(), p, M) * den.inverse();
}

enum class IntegrandKind { power_bracket, deg_falling_bracket };

inline const char* integrand_kind_name(IntegrandKind k) {
  return k == IntegrandKind::power_bracket ? "power_bracket" : "deg_falling_bracket";
}

// Integrand of an r-fold fermionic integral in y_1..y_r:
//   power_bracket:        [x + y_1 + ... + y_r]_q^n
//   deg_falling_bracket:  ([x + y_1 + ... + y_r]_q)_{n,lambda0}
struct IntegrandSpec {
  IntegrandKind kind = IntegrandKind::power_bracket;
  unsigned n = 0;
  unsigned x = 0;
  Rational lambda0;
  unsigned r = 1;
};

namespace detail {

// f evaluated where [x + y]_q = bracket.
inline PadicInt integrand_from_bracket(const IntegrandSpec& spec, const PadicInt& bracket, const PadicInt& lambda) {
  if (spec.kind == IntegrandKind::power_bracket) return bracket.pow(spec.n);
  PadicInt f(bracket.prime(), bracket.precision(), 1), shift(bracket.prime(), bracket.precision());
  for (unsigned j = 0; j < spec.n; ++j) {
    f *= bracket - shift;
    shift += lambda;
  }
  return f;
}

}  // namespace detail

inline constexpr std::uint64_t default_term_budget = 10'000'000;

// Finite sum over y in [0, p^N)^r of f(x + y_1 + ... + y_r) (-q)^(y_1 + ... + y_r),
// divided by [p^N]_{-q}^r, in Z/p^M.
inline PadicInt fermionic_sum(const IntegrandSpec& spec, const Rational& q0, unsigned N, std::uint64_t p,
                              unsigned M, std::uint64_t budget = default_term_budget) {
  if (spec.r == 0) throw InvalidArgument("fold count r must be positive");
  if (N == 0) throw InvalidArgument("level N must be positive");
  if (M < N + 2) throw InvalidArgument("precision M must be at least N + 2");
  const PadicInt q = padic_from_rational(q0, p, M);
  const PadicInt one(p, M, 1);
  if ((q - one).valuation() < 1)
    throw InvalidArgument("q0 = " + q0.str() + " is not congruent to 1 mod " + std::to_string(p));
  const PadicInt lambda = padic_from_rational(spec.lambda0, p, M);

  const std::uint64_t P = detail::checked_power(p, N);
  std::uint64_t terms = 1;
  for (unsigned i = 0; i < spec.r; ++i) {
    if (P == 0 || terms > budget / P)
      throw BudgetExceeded("p^(rN) exceeds the term budget of " + std::to_string(budget));
    terms *= P;
  }

  // weight[s] = number of r-tuples in [0, P)^r with sum s, mod p^M
  const std::uint64_t span = spec.r * (P - 1) + 1;
  std::vector<PadicInt> weight(span, PadicInt(p, M));
  for (std::uint64_t s = 0; s < P; ++s) weight[s] = one;
  for (unsigned fold = 1; fold < spec.r; ++fold) {
    std::vector<PadicInt> next(span, PadicInt(p, M));
    PadicInt window(p, M);
    for (std::uint64_t s = 0; s < span; ++s) {
      window += weight[s];
      if (s >= P) window -= weight[s - P];
      next[s] = window;
    }
    weight = std::move(next);
  }

  const PadicInt minus_q = -q;
  PadicInt bracket(p, M);  // [k]_q, starting at k = 0
  for (unsigned k = 0; k < spec.x; ++k) bracket = one + q * bracket;
  PadicInt sign_pow = one, total(p, M);
  for (std::uint64_t s = 0; s < span; ++s) {
    total += weight[s] * detail::integrand_from_bracket(spec, bracket, lambda) * sign_pow;
    sign_pow *= minus_q;
    bracket = one + q * bracket;
  }

  PadicInt normalizer(p, M), y_pow = one;
  for (std::uint64_t y = 0; y < P; ++y) {
    normalizer += y_pow;
    y_pow *= minus_q;
  }
  return total * normalizer.inverse().pow(spec.r);
}

// Exact value of the integral in Q, from the symbolic families.
inline Rational exact_integral_target(const IntegrandSpec& spec, const Rational& q0) {
  MPoly family;
  if (spec.kind == IntegrandKind::power_bracket)
    family = spec.r == 1 ? qeuler_poly(spec.n) : qeuler_poly_order(spec.n, spec.r);
  else
    family = deg_qeuler_order(spec.n, spec.r);
  return specialize(family, q_power(spec.x), RatFuncQ(spec.lambda0)).constant_value().eval(q0);
}

// Integrand at a single integer argument k, i.e. f(y) with x + y = k.
inline PadicInt integrand_at(const IntegrandSpec& spec, const PadicInt& q, const PadicInt& lambda,
                             std::uint64_t k) {
  const PadicInt one(q.prime(), q.precision(), 1);
  PadicInt bracket(q.prime(), q.precision());
  for (std::uint64_t i = 0; i < k; ++i) bracket = one + q * bracket;
  return detail::integrand_from_bracket(spec, bracket, lambda);
}

struct ValuationRow {
  unsigned N = 0;
  unsigned valuation = 0;
  bool saturated = false;  // valuation reached the precision M
};

struct PadicReport {
  std::string check;
  IntegrandSpec spec;
  Rational q0;
  std::uint64_t p = 3;
  unsigned M = 0;
  std::vector<ValuationRow> rows;
  bool pass = false;
  std::string note;
};

// Valuation of I_N - exact for N = N_min..N_max. Passes iff the valuations
// never decrease and the last one is at least N_max - 1.
inline PadicReport convergence_report(const IntegrandSpec& spec, const Rational& q0, unsigned N_min,
                                      unsigned N_max, std::uint64_t p, unsigned M,
                                      std::uint64_t budget = default_term_budget) {
  if (N_min == 0 || N_min > N_max) throw InvalidArgument("invalid N range");
  PadicReport rep{"convergence", spec, q0, p, M, {}, true, {}};
  const PadicInt target = padic_from_rational(exact_integral_target(spec, q0), p, M);
  for (unsigned N = N_min; N <= N_max; ++N) {
    const unsigned v = (fermionic_sum(spec, q0, N, p, M, budget) - target).valuation();
    if (!rep.rows.empty() && v < rep.rows.back().valuation) rep.pass = false;
    rep.rows.push_back({N, v, v == M});
  }
  if (rep.rows.back().valuation + 1 < N_max) rep.pass = false;
  return rep;
}

struct RecurrenceReport {
  IntegrandSpec spec;
  Rational q0;
  std::uint64_t p = 3;
  unsigned M = 0;
  unsigned N = 0;
  unsigned identity_valuation = 0;   // of q I_N(f_1) + I_N(f) - [2]_q (f(0) + q^P f(P)) / (1 + q^P)
  unsigned deviation_valuation = 0;  // of q I_N(f_1) + I_N(f) - [2]_q f(0)
  bool pass = false;
};

// The finite-level form of q I(f_1) + I(f) = [2]_q f(0), with P = p^N:
//   q I_N(f_1) + I_N(f) = [2]_q (f(0) + q^P f(P)) / (1 + q^P)
// holds exactly; pass iff it holds to the full precision M.
inline RecurrenceReport finite_recurrence_check(const IntegrandSpec& spec, const Rational& q0, unsigned N,
                                                std::uint64_t p, unsigned M,
                                                std::uint64_t budget = default_term_budget) {
  if (spec.r != 1) throw InvalidArgument("the finite recurrence check needs r = 1");
  IntegrandSpec shifted = spec;
  shifted.x += 1;
  const PadicInt q = padic_from_rational(q0, p, M);
  const PadicInt lambda = padic_from_rational(spec.lambda0, p, M);
  const PadicInt one(p, M, 1);
  const PadicInt lhs = q * fermionic_sum(shifted, q0, N, p, M, budget) + fermionic_sum(spec, q0, N, p, M, budget);
  const std::uint64_t P = detail::checked_power(p, N);
  const PadicInt qP = q.pow(P);
  const PadicInt f0 = integrand_at(spec, q, lambda, spec.x);
  const PadicInt fP = integrand_at(spec, q, lambda, spec.x + P);
  const PadicInt two = one + q;
  const PadicInt rhs = two * (f0 + qP * fP) * (one + qP).inverse();
  RecurrenceReport rep{spec, q0, p, M, N, 0, 0, false};
  rep.identity_valuation = (lhs - rhs).valuation();
  rep.deviation_valuation = (lhs - two * f0).valuation();
  rep.pass = rep.identity_valuation == M;
  return rep;
}

// q I_N(([x+y+1]_q)_{n,lambda}) + I_N(([x+y]_q)_{n,lambda}) - [2]_q ([x]_q)_{n,lambda}
// for N = N_min..N_max. Passes iff every valuation is at least N - 1.
inline PadicReport shifted_integral_check(const IntegrandSpec& spec, const Rational& q0, unsigned N_min,
                                          unsigned N_max, std::uint64_t p, unsigned M,
                                          std::uint64_t budget = default_term_budget) {
  if (N_min == 0 || N_min > N_max) throw InvalidArgument("invalid N range");
  PadicReport rep{"shifted_integral", spec, q0, p, M, {}, true, {}};
  for (unsigned N = N_min; N <= N_max; ++N) {
    const unsigned v = finite_recurrence_check(spec, q0, N, p, M, budget).deviation_valuation;
    if (v + 1 < N) rep.pass = false;
    rep.rows.push_back({N, v, v == M});
  }
  return rep;
}

}  // namespace qeuler

#endif  // QEULER_PADIC_HPP
