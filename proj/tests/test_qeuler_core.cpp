#include <vector>

#include <gtest/gtest.h>

#include "qeuler/qeuler_core.hpp"

namespace {

using namespace qeuler;

const UniPolyQ q = UniPolyQ::q();

// Coefficients a_n of 2/(e^t + 1) by power-series inversion.
std::vector<Rational> euler_gf_coeffs(std::size_t n_max) {
  std::vector<Rational> b(n_max + 1), a(n_max + 1);
  Rational fact = 1;
  for (std::size_t k = 0; k <= n_max; ++k) {
    if (k) fact *= Rational(static_cast<long>(k));
    b[k] = fact.inverse();
  }
  b[0] += Rational(1);
  a[0] = Rational(2) / b[0];
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational s;
    for (std::size_t k = 1; k <= n; ++k) s += b[k] * a[n - k];
    a[n] = -s / b[0];
  }
  return a;
}

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= Rational(static_cast<long>(k));
  return f;
}

TEST(ClassicalEuler, Examples) {
  EXPECT_EQ(classical_euler_number(0), Rational(1));
  EXPECT_EQ(classical_euler_number(1), Rational(-1, 2));
  EXPECT_EQ(classical_euler_number(3), Rational(1, 4));
  EXPECT_EQ(classical_euler_poly(0), UniPolyQ(1));
  EXPECT_EQ(classical_euler_poly(1), (UniPolyQ{Rational(-1, 2), Rational(1)}));
}

TEST(ClassicalEuler, MatchesGeneratingFunction) {
  const auto a = euler_gf_coeffs(12);
  for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(classical_euler_number(n), factorial(n) * a[n]) << n;
  // E_n(x) = n! [t^n] a(t) e^(xt)
  for (std::size_t n = 0; n <= 10; ++n)
    for (long x = -2; x <= 5; ++x) {
      Rational s;
      for (std::size_t k = 0; k <= n; ++k) s += a[k] * Rational(x).pow(static_cast<unsigned>(n - k)) / factorial(n - k);
      EXPECT_EQ(classical_euler_poly(n).eval(x), factorial(n) * s);
    }
}

TEST(ClassicalEuler, SequenceSatisfiesUmbralRecurrence) {
  const auto seq = ClassicalEulerSeq::build(14);
  for (std::size_t n = 1; n <= 14; ++n) {
    Rational s = seq[n];
    for (std::size_t l = 0; l <= n; ++l) s += Rational(binomial(n, static_cast<long>(l))) * seq[l];
    EXPECT_TRUE(s.is_zero()) << n;
  }
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(classical_euler_poly(n).eval(0), classical_euler_number(n));
}

TEST(QEulerNumber, Examples) {
  EXPECT_TRUE(qeuler_number(0).is_one());
  EXPECT_EQ(qeuler_number(1), RatFuncQ::canonical(-q, UniPolyQ(1) + q * q));
  const UniPolyQ e2_num = q * (q * q - UniPolyQ(1));
  const UniPolyQ e2_den = (UniPolyQ(1) + q * q) * (UniPolyQ(1) + q.pow(3));
  EXPECT_EQ(qeuler_number(2), RatFuncQ::canonical(e2_num, e2_den));
}

TEST(QEulerNumber, RecurrenceResidualVanishes) {
  const auto seq = QEulerNumberSeq::build(20);
  EXPECT_TRUE(seq[0].is_one());
  for (std::size_t n = 1; n <= 20; ++n) EXPECT_TRUE(carlitz_recurrence_residual(seq.values(), n).is_zero()) << n;
}

TEST(QEulerNumber, ClassicalLimit) {
  for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(qeuler_number(n).eval(1), classical_euler_number(n)) << n;
}

TEST(QEulerPoly, Examples) {
  EXPECT_EQ(qeuler_poly(0), MPoly(1));
  const RatFuncQ inv = RatFuncQ(UniPolyQ{1, -1}).inverse();
  const RatFuncQ e1 = RatFuncQ::canonical(-q, UniPolyQ(1) + q * q);
  EXPECT_EQ(qeuler_poly(1), MPoly(inv) - MPoly::monomial(inv, 0, 1) + MPoly::monomial(e1, 0, 1));
  for (std::size_t n = 0; n <= 12; ++n)
    EXPECT_EQ(specialize(qeuler_poly(n), RatFuncQ(1), std::nullopt).constant_value(), qeuler_number(n)) << n;
}

TEST(QEulerPolyExplicit, MatchesUmbralDefinition) {
  EXPECT_EQ(qeuler_poly_explicit(0), MPoly(1));
  for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(qeuler_poly_explicit(n), qeuler_poly(n)) << n;
}

TEST(QEulerPolyOrder, Examples) {
  for (unsigned r = 1; r <= 4; ++r) EXPECT_EQ(qeuler_poly_order(0, r), MPoly(1));
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(qeuler_poly_order(n, 1), qeuler_poly_explicit(n));
  const RatFuncQ two_sq = RatFuncQ(UniPolyQ{1, 1}).pow(2);
  const RatFuncQ inv = RatFuncQ(UniPolyQ{1, -1}).inverse();
  const MPoly expected = (MPoly(RatFuncQ(UniPolyQ{1, 1}).pow(2).inverse()) -
                          MPoly::monomial(RatFuncQ(UniPolyQ{1, 0, 1}).pow(2).inverse(), 0, 1)) *
                         (two_sq * inv);
  EXPECT_EQ(qeuler_poly_order(1, 2), expected);
  EXPECT_THROW(qeuler_poly_order(1, 0), InvalidArgument);
}

TEST(QEulerPoly, ClassicalLimitAtIntegerX) {
  for (std::size_t n = 0; n <= 10; ++n) {
    const MPoly e = qeuler_poly(n);
    for (unsigned x0 = 0; x0 <= 5; ++x0)
      EXPECT_EQ(specialize(e, q_power(x0), std::nullopt).constant_value().eval(1), classical_euler_poly(n).eval(x0))
          << n << " " << x0;
  }
}

}  // namespace
