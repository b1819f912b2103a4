#include <random>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "qeuler/format.hpp"
#include "qeuler/serialize.hpp"

namespace {

using namespace qeuler;

const RatFuncQ e1 = RatFuncQ::canonical(UniPolyQ{0, -1}, UniPolyQ{1, 0, 1});

TEST(Serialize, Shapes) {
  EXPECT_EQ(to_json(Rational(-3, 2)), Json("-3/2"));
  EXPECT_EQ(to_json(Rational(4)), Json("4"));
  EXPECT_EQ(to_json(UniPolyQ{Rational(1, 2), 0, 3}).dump(), R"(["1/2","0","3"])");
  EXPECT_EQ(to_json(e1).dump(), R"({"num":["0","-1"],"den":["1","0","1"]})");
  EXPECT_EQ(to_json(MPoly::X() * MPoly::lambda() + MPoly(2)).dump(),
            R"({"terms":[{"dl":0,"dx":0,"c":{"num":["2"],"den":["1"]}},{"dl":1,"dx":1,"c":{"num":["1"],"den":["1"]}}]})");
  EXPECT_EQ(to_json(QSeries::from_poly(UniPolyQ{1, -1}, 3)).dump(), R"({"K":3,"coeffs":["1","-1","0"]})");
}

TEST(Serialize, ReportShapes) {
  const Json j = to_json(summability_scan(0, SeriesForm::literal_thm4, 0, 0, 2));
  EXPECT_EQ(j.at("form"), "literal_thm4");
  EXPECT_EQ(j.at("valuations").dump(), "[0,0,0]");
  EXPECT_FALSE(j.at("summable").get<bool>());
  PadicReport rep{"convergence", {IntegrandKind::power_bracket, 1, 0, 0, 1}, 4, 3, 8, {{1, 1, false}}, true, {}};
  EXPECT_EQ(to_json(rep).dump(),
            R"({"check":"convergence","spec":{"kind":"power_bracket","n":1,"x":0,"lambda0":"0","r":1},)"
            R"("q0":"4","p":3,"M":8,"rows":[{"N":1,"valuation":1,"saturated":false}],"pass":true})");
}

TEST(Serialize, ParseRejectsBadShapes) {
  EXPECT_THROW(rational_from_json(Json(3)), ParseError);
  EXPECT_THROW(unipoly_from_json(Json("1")), ParseError);
  EXPECT_THROW(ratfunc_from_json(Json::object()), ParseError);
  EXPECT_THROW(ratfunc_from_json(Json{{"num", {"1"}}, {"den", {"0"}}}), ZeroDenominator);
}

TEST(Serialize, ParseCanonicalizes) {
  const Json j{{"num", {"-1", "0", "1"}}, {"den", {"-2", "2"}}};
  EXPECT_EQ(ratfunc_from_json(j), RatFuncQ(UniPolyQ{Rational(1, 2), Rational(1, 2)}));
}

TEST(Serialize, RoundTripProperty) {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 40; ++trial) {
    const RatFuncQ f = qeuler::testing::random_ratfunc(rng);
    EXPECT_EQ(ratfunc_from_json(Json::parse(to_json(f).dump())), f);
    const MPoly p = qeuler::testing::random_mpoly(rng);
    EXPECT_EQ(mpoly_from_json(Json::parse(to_json(p).dump())), p);
  }
  const QSeries s = series_deg_qeuler(2, 1, Rational(1, 2), 10);
  EXPECT_EQ(qseries_from_json(to_json(s)), s);
  EXPECT_EQ(qseries_from_json(to_json(s)).order(), 10u);
}

TEST(Format, ParseOutput) {
  EXPECT_EQ(format::parse_output("csv"), format::Output::csv);
  EXPECT_EQ(format::parse_output("latex"), format::Output::latex);
  EXPECT_THROW(format::parse_output("xml"), InvalidArgument);
}

TEST(Format, Text) {
  EXPECT_EQ(format::value_text(to_json(e1)), "(-q)/(1+q^2)");
  EXPECT_EQ(format::value_text(to_json(Rational(1, 4))), "1/4");
  EXPECT_EQ(format::value_text(to_json(classical_euler_poly(1))), "-1/2+x");
  EXPECT_EQ(format::value_text(to_json(MPoly::X() * e1)), "[(-q)/(1+q^2)]*X");
  const Json table = Json::array({to_json(RatFuncQ(1)), to_json(e1)});
  EXPECT_EQ(format::render_table(table, format::Output::text), "0: 1\n1: (-q)/(1+q^2)\n");
}

TEST(Format, Latex) {
  EXPECT_EQ(format::value_latex(to_json(e1)), "\\frac{-q}{1 + q^{2}}");
  EXPECT_EQ(format::value_latex(to_json(Rational(-1, 2))), "\\frac{-1}{2}");
  const Json table = Json::array({to_json(RatFuncQ(1)), to_json(e1)});
  EXPECT_EQ(format::render_table(table, format::Output::latex),
            "\\begin{align*}\nT_{0} &= 1 \\\\\nT_{1} &= \\frac{-q}{1 + q^{2}}\n\\end{align*}\n");
}

TEST(Format, Csv) {
  const Json table = Json::array({to_json(RatFuncQ(1)), to_json(e1)});
  EXPECT_EQ(format::render_table(table, format::Output::csv),
            "n,dl,dx,part,power,coeff\n0,0,0,num,0,1\n0,0,0,den,0,1\n"
            "1,0,0,num,1,-1\n1,0,0,den,0,1\n1,0,0,den,2,1\n");
  const Json mtable = Json::array({to_json(MPoly::monomial(RatFuncQ(3), 1, 0))});
  EXPECT_EQ(format::render_table(mtable, format::Output::csv),
            "n,dl,dx,part,power,coeff\n0,1,0,num,0,3\n0,1,0,den,0,1\n");
}

TEST(Format, JsonIsPrettyPrintedDump) {
  const Json table = Json::array({to_json(Rational(1))});
  EXPECT_EQ(format::render_table(table, format::Output::json), "[\n  \"1\"\n]\n");
}

}  // namespace
