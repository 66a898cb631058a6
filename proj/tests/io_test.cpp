#include <gtest/gtest.h>

#include "dirichlet_lab/core/random.hpp"
#include "dirichlet_lab/io/parse.hpp"
#include "dirichlet_lab/io/report.hpp"

using namespace dirichlet_lab;
using namespace dirichlet_lab::io;

TEST(Decimal, DirectedRounding) {
  EXPECT_EQ(decimal_directed(Rational(1, 3), false, 5), "3.3333e-01");
  EXPECT_EQ(decimal_directed(Rational(1, 3), true, 5), "3.3334e-01");
  EXPECT_EQ(decimal_directed(Rational(1), false, 3), "1.00e+00");
  EXPECT_EQ(decimal_directed(Rational(99999, 100000), true, 3), "1.00e+00");
  EXPECT_EQ(decimal_directed(Rational(-1, 3), false, 5), "-3.3334e-01");
  EXPECT_EQ(decimal_directed(Rational(12345), true, 2), "1.3e+04");
  EXPECT_EQ(decimal_directed(Rational(0), true), "0");
  EXPECT_EQ(decimal(1.75L), "1.75000000000000000000e+00");
  EXPECT_EQ(decimal(std::numeric_limits<long double>::infinity()), "inf");
}

TEST(Decimal, EnclosesRandomRationals) {
  Rng rng(21);
  for (int i = 0; i < 2000; ++i) {
    Integer num(static_cast<long>(rng.uniform(1, 1000000000))), den(static_cast<long>(rng.uniform(1, 1000000)));
    Rational r = make_rational(rng.coin() ? num : Integer(-num), den * pow_integer(Integer(10), rng.uniform(0, 30)));
    int digits = static_cast<int>(rng.uniform(1, 25));
    Rational lo = parse_rational(decimal_directed(r, false, digits));
    Rational hi = parse_rational(decimal_directed(r, true, digits));
    EXPECT_LE(lo, r);
    EXPECT_GE(hi, r);
    // one unit in the last place apart at most
    EXPECT_LE(hi - lo, abs(r) * pow_rational(Rational(10), 1 - digits));
  }
}

TEST(Parse, Words) {
  EXPECT_EQ(parse_word("(1,2,3)"), (cf::Word{1, 2, 3}));
  EXPECT_EQ(parse_word("[4]"), (cf::Word{4}));
  EXPECT_EQ(parse_word(" 2 , 1 "), (cf::Word{2, 1}));
  EXPECT_TRUE(parse_word("()").empty());
  EXPECT_THROW(parse_word("(1,0)"), Error);
  EXPECT_THROW(parse_word("(1,x)"), Error);
}

TEST(Parse, RealInputs) {
  auto r = parse_real_input("83/200");
  EXPECT_EQ(std::get<cf::ExactRational>(r).value, Rational(83, 200));
  auto g = parse_real_input("periodic:[];[1]");
  EXPECT_TRUE(std::get<cf::PeriodicWord>(g).preperiod.empty());
  EXPECT_EQ(std::get<cf::PeriodicWord>(g).period, cf::Word{1});
  auto p = parse_real_input("periodic:[1,2];[3,4]");
  EXPECT_EQ(std::get<cf::PeriodicWord>(p).preperiod, (cf::Word{1, 2}));
  auto d = std::get<cf::ValidatedInterval>(parse_real_input("0.414"));
  EXPECT_LE(d.lo, Rational(4135, 10000));
  EXPECT_GE(d.hi, Rational(4145, 10000));
  auto iv = std::get<cf::ValidatedInterval>(parse_real_input("interval:[1/4, 1/3]"));
  EXPECT_EQ(iv.hi, Rational(1, 3));
  EXPECT_THROW(parse_real_input("3/2"), Error);
  EXPECT_THROW(parse_real_input("periodic:[1]"), Error);
  EXPECT_THROW(parse_real_input("golden ratio"), Error);
}

TEST(Parse, Counts) {
  EXPECT_EQ(parse_count("1e6"), 1000000u);
  EXPECT_EQ(parse_count("65536"), 65536u);
  EXPECT_THROW(parse_count("1.5"), Error);
  EXPECT_THROW(parse_count("-3"), Error);
}

TEST(Csv, Quoting) {
  Table t{{"a", "b"}, {{"(1,2)", "say \"hi\""}, {"x", ""}}};
  EXPECT_EQ(to_csv(t), "a,b\n\"(1,2)\",\"say \"\"hi\"\"\"\nx,\n");
}

TEST(Report, RoundTripsThroughText) {
  Json payload = {{"interval", to_json(Interval(Rational(1, 3), Rational(1, 2)))},
                  {"word", to_json(cf::Word{2, 1})},
                  {"sum", to_json(DirectedSum{1.5L, 1.25L, 1.75L})}};
  Json report = make_report("expand", {{"seed", 1}}, payload);
  EXPECT_EQ(Json::parse(report.dump()), report);
  EXPECT_EQ(report.begin().key(), "schema");
  EXPECT_EQ(report["payload"]["interval"]["lo"], "3.33333333333333333333e-01");
  EXPECT_EQ(report["payload"]["interval"]["hi"], "5.00000000000000000000e-01");
}
