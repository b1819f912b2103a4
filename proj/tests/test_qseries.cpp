#include <random>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "qeuler/qseries.hpp"

namespace {

using namespace qeuler;

const UniPolyQ q = UniPolyQ::q();

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

TEST(QsFromRatfunc, Examples) {
  const QSeries s = qs_from_ratfunc(RatFuncQ(UniPolyQ{1, 1}).inverse(), 4);
  EXPECT_EQ(s.coeffs(), ints({1, -1, 1, -1}));
  const QSeries one = qs_from_ratfunc(RatFuncQ::canonical(UniPolyQ{1, 1}, UniPolyQ{1, 1}), 7);
  EXPECT_EQ(one, QSeries::from_poly(UniPolyQ(1), 7));
  EXPECT_THROW(qs_from_ratfunc(RatFuncQ(q).inverse(), 5), PoleAtZero);
}

TEST(QsFromRatfunc, Multiplicative) {
  std::mt19937 rng(41);
  int tried = 0;
  while (tried < 30) {
    const RatFuncQ a = qeuler::testing::random_ratfunc(rng), b = qeuler::testing::random_ratfunc(rng);
    try {
      const QSeries sa = qs_from_ratfunc(a, 12), sb = qs_from_ratfunc(b, 12);
      EXPECT_EQ(qs_from_ratfunc(a * b, 12), sa * sb);
      EXPECT_EQ(qs_from_ratfunc(a + b, 12), sa + sb);
      ++tried;
    } catch (const PoleAtZero&) {
    }
  }
}

TEST(SeriesDegQEuler, Examples) {
  for (unsigned x = 0; x <= 2; ++x)
    for (const Rational& lam : {Rational(0), Rational(1), Rational(1, 3)})
      EXPECT_EQ(series_deg_qeuler(0, x, lam, 12), QSeries::from_poly(UniPolyQ(1), 12));
  EXPECT_EQ(series_deg_qeuler(1, 0, 0, 10).coeffs(), ints({0, -1, 0, 1, 0, -1, 0, 1, 0, -1}));
}

TEST(SeriesDegQEuler, MatchesExactRoute) {
  for (std::size_t n = 0; n <= 6; ++n)
    for (unsigned x = 0; x <= 2; ++x)
      for (const Rational& lam : {Rational(0), Rational(1), Rational(1, 2)})
        EXPECT_EQ(series_deg_qeuler(n, x, lam, 30), exact_series_deg_qeuler_order(n, 1, x, lam, 30))
            << n << " " << x << " " << lam.str();
}

TEST(SeriesDegQEulerOrder, Examples) {
  for (unsigned r = 1; r <= 3; ++r)
    EXPECT_EQ(series_deg_qeuler_order(0, r, 1, 1, 15), QSeries::from_poly(UniPolyQ(1), 15));
  for (std::size_t n = 0; n <= 5; ++n)
    EXPECT_EQ(series_deg_qeuler_order(n, 1, 1, 1, 25), series_deg_qeuler(n, 1, 1, 25));
  EXPECT_THROW(series_deg_qeuler_order(1, 0, 0, 0, 10), InvalidArgument);
}

TEST(SeriesDegQEulerOrder, MatchesExactRoute) {
  for (std::size_t n = 0; n <= 5; ++n)
    for (unsigned r = 2; r <= 3; ++r)
      for (unsigned x = 0; x <= 1; ++x)
        for (long lam = 0; lam <= 1; ++lam)
          EXPECT_EQ(series_deg_qeuler_order(n, r, x, lam, 25), exact_series_deg_qeuler_order(n, r, x, lam, 25))
              << n << " " << r << " " << x << " " << lam;
}

TEST(Summability, LiteralFormAtZeroIsNotSummable) {
  const SummabilityReport rep = summability_scan(0, SeriesForm::literal_thm4);
  EXPECT_FALSE(rep.summable);
  ASSERT_EQ(rep.valuations.size(), 21u);
  for (const auto& v : rep.valuations) EXPECT_EQ(v, std::optional<std::size_t>(0));
}

TEST(Summability, CorrectedForm) {
  const SummabilityReport zero = summability_scan(0, SeriesForm::corrected);
  EXPECT_TRUE(zero.summable);
  for (std::size_t m = 0; m < zero.valuations.size(); ++m) EXPECT_EQ(zero.valuations[m], std::optional(m));
  const SummabilityReport three = summability_scan(3, SeriesForm::corrected);
  EXPECT_TRUE(three.summable);
  for (std::size_t m = 0; m < three.valuations.size(); ++m)
    if (three.valuations[m]) {
      EXPECT_GE(*three.valuations[m], m);
    }
}

}  // namespace
