#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "dirichlet_lab/cf/cylinder.hpp"
#include "dirichlet_lab/cf/identities.hpp"

using namespace dirichlet_lab;
using namespace dirichlet_lab::cf;

namespace {

PeriodicWord golden() { return PeriodicWord(Word(), Word{1}); }

// Gauss map on a rational, step by step; independent of the Euclid loop in continued_fraction.
Word gauss_digits_oracle(Rational x, std::size_t depth) {
  Word w;
  while (x != 0 && w.size() < depth) {
    Rational inv = 1 / x;
    Integer a = floor_of(inv);
    w.push_back(a);
    x = inv - Rational(a);
  }
  return w;
}

// All words of the given length with digits in [1, max_digit].
template <class Fn>
void for_each_word(std::size_t length, long max_digit, Fn fn) {
  std::vector<long> digits(length, 1);
  while (true) {
    std::vector<Integer> big(digits.begin(), digits.end());
    fn(Word(big));
    std::size_t i = 0;
    while (i < length && digits[i] == max_digit) digits[i++] = 1;
    if (i == length) return;
    ++digits[i];
  }
}

}  // namespace

TEST(ContinuedFraction, GoldenMeanIsAllOnes) {
  auto e = continued_fraction(golden(), 5);
  EXPECT_EQ(e.word, (Word{1, 1, 1, 1, 1}));
  EXPECT_EQ(e.status, ExpansionStatus::ExactPeriodic);
}

TEST(ContinuedFraction, RationalMatchesGaussMapOracle) {
  Rational x(83, 200);
  Word oracle = gauss_digits_oracle(x, 100);
  auto e = continued_fraction(ExactRational(x), 4);
  EXPECT_EQ(e.word, oracle.prefix(4));
  EXPECT_EQ(e.word.prefix(3), (Word{2, 2, 2}));
  EXPECT_EQ(e.status, ExpansionStatus::DepthReached);
  auto full = continued_fraction(ExactRational(x), 100);
  EXPECT_EQ(full.status, ExpansionStatus::Exact);
  EXPECT_EQ(full.word, oracle);
  EXPECT_EQ(evaluate(full.word), x);
}

TEST(ContinuedFraction, CanonicalFormOfTwoThirds) {
  auto e = continued_fraction(ExactRational(Rational(2, 3)), 10);
  EXPECT_EQ(e.word, (Word{1, 2}));
  EXPECT_EQ(e.status, ExpansionStatus::Exact);
  EXPECT_TRUE(e.word.is_canonical());
}

TEST(ContinuedFraction, ZeroHasEmptyExpansion) {
  auto e = continued_fraction(ExactRational(Rational(0)), 3);
  EXPECT_TRUE(e.word.empty());
  EXPECT_EQ(e.status, ExpansionStatus::DefinedAsZeroExpansion);
  EXPECT_THROW(continued_fraction(ExactRational(Rational(0)), 0), Error);
}

TEST(ContinuedFraction, IntervalAcrossFirstBreakpointCertifiesNothing) {
  auto e = continued_fraction(ValidatedInterval(Rational(49, 100), Rational(51, 100)), 5);
  EXPECT_TRUE(e.word.empty());
  EXPECT_EQ(e.status, ExpansionStatus::PrecisionExhausted);
  EXPECT_EQ(e.certified, 0u);
}

TEST(ContinuedFraction, IntervalDigitsArePrefixOfExactDigits) {
  QuadraticSurd x = surd_value(PeriodicWord(Word{3, 1}, Word{1, 2, 4}));
  for (unsigned bits : {16u, 64u, 256u}) {
    auto e = continued_fraction(interval_around(x, bits), 500);
    EXPECT_EQ(e.status, ExpansionStatus::PrecisionExhausted);
    auto exact = continued_fraction(PeriodicWord(Word{3, 1}, Word{1, 2, 4}), e.certified + 1);
    EXPECT_EQ(e.word, exact.word.prefix(e.certified));
    // Cylinder lengths shrink like q_n^-2, so roughly bits / (2 log2 q-growth) digits survive.
    EXPECT_GT(e.certified, bits / 8);
  }
}

TEST(ContinuedFraction, DecimalIntervalOfSqrt2) {
  auto e = continued_fraction(interval_from_decimal("0.41421356237309504880168872420969807856967"), 100);
  EXPECT_EQ(e.status, ExpansionStatus::PrecisionExhausted);
  ASSERT_GE(e.certified, 20u);
  for (const auto& d : e.word) EXPECT_EQ(d, 2);
}

TEST(Convergents, SmallWordAgainstNestedFraction) {
  auto t = convergents(Word{1, 2, 3});
  EXPECT_EQ(t.p(1), 1);
  EXPECT_EQ(t.q(1), 1);
  EXPECT_EQ(t.p(2), 2);
  EXPECT_EQ(t.q(2), 3);
  EXPECT_EQ(t.p(3), 7);
  EXPECT_EQ(t.q(3), 10);
  EXPECT_EQ(evaluate(Word{1, 2, 3}), Rational(7, 10));
  EXPECT_EQ(evaluate(Word{1, 2}), t.convergent(2));
  EXPECT_EQ(evaluate(Word{1}), t.convergent(1));
}

TEST(Convergents, EmptyWordHasOnlyConventions) {
  auto t = convergents(Word());
  EXPECT_EQ(t.depth(), 0u);
  EXPECT_EQ(t.p(-1), 1);
  EXPECT_EQ(t.q(-1), 0);
  EXPECT_EQ(t.p(0), 0);
  EXPECT_EQ(t.q(0), 1);
}

TEST(Convergents, AllOnesGivesFibonacci) {
  auto t = convergents(Word{1, 1, 1, 1, 1});
  std::vector<long> fib = {1, 2, 3, 5, 8};
  for (long k = 1; k <= 5; ++k) EXPECT_EQ(t.q(k), fib[k - 1]);
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(Word{2}), Rational(1, 2));
  EXPECT_EQ(evaluate(Word{1, 1, 1}), Rational(2, 3));
  try {
    evaluate(Word());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyWord);
  }
}

TEST(Cylinder, OrderOneAndTwo) {
  auto c1 = cylinder(Word{1});
  EXPECT_EQ(c1.left, Rational(1, 2));
  EXPECT_EQ(c1.right, Rational(1));
  EXPECT_FALSE(c1.left_closed);
  EXPECT_TRUE(c1.right_closed);

  auto c2 = cylinder(Word{1, 1});
  EXPECT_EQ(c2.left, Rational(1, 2));
  EXPECT_EQ(c2.right, Rational(2, 3));
  EXPECT_TRUE(c2.left_closed);
  EXPECT_EQ(c2.length(), Rational(1, 6));
}

TEST(Cylinder, TenOnesHasFibonacciLength) {
  Word w;
  for (int i = 0; i < 10; ++i) w.push_back(Integer(1));
  EXPECT_EQ(cylinder(w).length(), Rational(1, 89 * (89 + 55)));
}

TEST(Cylinder, MembershipMatchesDigitsOfRationals) {
  // x lies in I_n(w) iff its first n digits are w (rationals with longer expansions).
  for (long q = 2; q <= 60; ++q) {
    for (long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Rational x(p, q);
      Word w = continued_fraction(ExactRational(x), 50).word;
      for (std::size_t n = 1; n <= w.size(); ++n) {
        EXPECT_TRUE(cylinder(w.prefix(n)).contains(x)) << x << " n=" << n;
        Word other = w.prefix(n - 1).extended(w.digit(n) + 1);
        if (n < w.size()) {
          EXPECT_FALSE(cylinder(other).contains(x));
        }
      }
    }
  }
}

TEST(Cylinder, NestingAndDisjointness) {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Cylinder> level;
    for_each_word(n, 3, [&](const Word& w) {
      auto c = cylinder(w);
      for (long d = 1; d <= 4; ++d) EXPECT_TRUE(c.contains(cylinder(w.extended(Integer(d)))));
      level.push_back(c);
    });
    for (std::size_t i = 0; i < level.size(); ++i)
      for (std::size_t j = i + 1; j < level.size(); ++j) EXPECT_TRUE(level[i].disjoint_from(level[j]));
  }
}

TEST(GaussStep, Examples) {
  auto [a, t] = gauss_step(ExactRational(Rational(7, 10)));
  EXPECT_EQ(a, 1);
  EXPECT_EQ(std::get<ExactRational>(t).value, Rational(3, 7));

  PeriodicWord sqrt2m1(Word(), Word{2});
  auto [b, u] = gauss_step(sqrt2m1);
  EXPECT_EQ(b, 2);
  EXPECT_EQ(surd_value(std::get<PeriodicWord>(u)), surd_value(sqrt2m1));

  auto [c, z] = gauss_step(ExactRational(Rational(1, 2)));
  EXPECT_EQ(c, 2);
  EXPECT_EQ(std::get<ExactRational>(z).value, 0);

  EXPECT_THROW(gauss_step(ExactRational(Rational(0))), Error);
  EXPECT_THROW(gauss_step(ValidatedInterval(Rational(49, 100), Rational(51, 100))), Error);
}

TEST(GaussStep, IntervalImageEnclosesExactImage) {
  QuadraticSurd x = surd_value(PeriodicWord(Word{5}, Word{1, 3}));
  auto iv = interval_around(x, 128);
  auto [a, image] = gauss_step(iv);
  EXPECT_EQ(a, 5);
  QuadraticSurd tx = x.reciprocal() - QuadraticSurd(Integer(5));
  const auto& img = std::get<ValidatedInterval>(image);
  EXPECT_EQ(less(tx, Interval(img.lo)), Truth::False);
  EXPECT_EQ(greater(tx, Interval(img.hi)), Truth::False);
}

TEST(PeriodicValue, KnownSurds) {
  EXPECT_EQ(surd_value(golden()), QuadraticSurd(Rational(-1, 2), Rational(1, 2), Integer(5)));
  EXPECT_EQ(surd_value(PeriodicWord(Word(), Word{2})), QuadraticSurd(Rational(-1), Rational(1), Integer(2)));
  // sqrt(3) - 1 = [1, 2, 1, 2, ...]
  EXPECT_EQ(surd_value(PeriodicWord(Word(), Word{1, 2})), QuadraticSurd(Rational(-1), Rational(1), Integer(3)));
}

TEST(BackwardRatio, Examples) {
  EXPECT_EQ(backward_ratio(Word{1, 2, 3}), Rational(3, 10));
  EXPECT_EQ(backward_ratio(Word{1, 2, 3}), evaluate(Word{3, 2, 1}));
  EXPECT_EQ(backward_ratio(Word{7}), Rational(1, 7));
  EXPECT_EQ(backward_ratio(Word{2, 1}), Rational(2, 3));
  EXPECT_EQ(backward_ratio(Word{2, 1}), evaluate(Word{1, 2}));
}

TEST(DirichletForm, Examples) {
  ContinuedFractionView g(golden(), 10);
  QuadraticSurd phi_inv(Rational(-1, 2), Rational(1, 2), Integer(5));
  Real df = dirichlet_form(g, 2);
  ASSERT_TRUE(df.is_exact());
  EXPECT_EQ(df.exact(), (QuadraticSurd(Integer(2)) + phi_inv).reciprocal());
  EXPECT_NEAR(static_cast<double>(df.approx()), 0.381966, 1e-6);

  ContinuedFractionView r(ExactRational(Rational(2, 3)), 10);
  EXPECT_EQ(dirichlet_form(r, 2).exact(), QuadraticSurd(Rational(1, 3)));

  ContinuedFractionView s(PeriodicWord(Word{4, 1}, Word{2, 3}), 10);
  EXPECT_EQ(dirichlet_form(s, 1).exact(), s.value().exact());
}

TEST(DirichletForm, IdentityAgreesWithDirectSubstitution) {
  std::mt19937_64 rng(11);
  std::geometric_distribution<long> geo(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Integer> pre, per;
    for (int i = 0; i < 6; ++i) pre.emplace_back(1 + geo(rng));
    for (int i = 0; i < 1 + trial % 3; ++i) per.emplace_back(1 + geo(rng));
    ContinuedFractionView v(PeriodicWord(Word(pre), Word(per)), 30);
    for (std::size_t n = 1; n <= 30; ++n) EXPECT_EQ(dirichlet_form(v, n).exact(), dirichlet_form_direct(v, n).exact());
  }
}

TEST(Legendre, Examples) {
  auto r = legendre_locate(Integer(2), Integer(5), ExactRational(Rational(83, 200)));
  EXPECT_TRUE(r.condition_holds);
  ASSERT_TRUE(r.index);
  EXPECT_EQ(*r.index, 2u);

  ContinuedFractionView g(golden(), 20);
  for (long n = 1; n <= 15; ++n) {
    auto self = legendre_locate(g.table().p(n), g.table().q(n), golden());
    ASSERT_TRUE(self.index);
    // q_1 = q_0 = 1 for the golden mean, so 1/1 is located at its first index.
    EXPECT_EQ(g.table().q(static_cast<long>(*self.index)), g.table().q(n));
  }

  auto miss = legendre_locate(Integer(1), Integer(2), ExactRational(Rational(9, 10)));
  EXPECT_FALSE(miss.condition_holds);
  EXPECT_FALSE(miss.index);

  EXPECT_THROW(legendre_locate(Integer(2), Integer(4), golden()), Error);
}

TEST(P5, Examples) {
  ContinuedFractionView g(golden(), 10);
  // q_4 = 5 and p_4/q_4 = 3/5 with q_0 = q_1 = 1.
  auto b = p5_bounds_check(g, 4);
  EXPECT_EQ(b.lower, Rational(1, 75));
  EXPECT_EQ(b.upper, Rational(1, 25));
  EXPECT_EQ(b.holds, Truth::True);
  EXPECT_NEAR(static_cast<double>(b.value.approx()), 0.018034, 1e-6);

  ContinuedFractionView r(ExactRational(Rational(83, 200)), 10);
  auto c = p5_bounds_check(r, 1);
  EXPECT_EQ(c.lower, Rational(1, 24));
  EXPECT_EQ(c.value.exact(), QuadraticSurd(Rational(17, 200)));
  EXPECT_EQ(c.upper, Rational(1, 8));
  EXPECT_EQ(c.holds, Truth::True);

  ContinuedFractionView big(PeriodicWord(Word(), Word{1000000}), 5);
  auto d = p5_bounds_check(big, 1);
  EXPECT_EQ(d.holds, Truth::True);
  EXPECT_NEAR(static_cast<double>(d.value.approx()), 1e-18, 1e-21);

  ContinuedFractionView term(ExactRational(Rational(1, 2)), 5);
  EXPECT_THROW(p5_bounds_check(term, 1), Error);
}

TEST(Properties, RationalRoundTripIsCanonical) {
  for (long q = 2; q <= 250; ++q) {
    for (long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      auto e = continued_fraction(ExactRational(Rational(p, q)), 1000);
      ASSERT_EQ(e.status, ExpansionStatus::Exact);
      EXPECT_TRUE(e.word.is_canonical());
      EXPECT_EQ(evaluate(e.word), Rational(p, q));
    }
  }
}

TEST(Properties, TableInvariantsOnEnumeratedWords) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for_each_word(n, 4, [&](const Word& w) {
      auto t = convergents(w);
      for (long k = 1; k <= static_cast<long>(n); ++k) {
        Integer det = t.p(k - 1) * t.q(k) - t.p(k) * t.q(k - 1);
        EXPECT_EQ(det, k % 2 == 0 ? 1 : -1);
        Integer g;
        mpz_gcd(g.get_mpz_t(), t.p(k).get_mpz_t(), t.q(k).get_mpz_t());
        EXPECT_EQ(g, 1);
        // q_k >= 2^{(k-1)/2}  <=>  q_k^2 >= 2^{k-1}
        EXPECT_GE(t.q(k) * t.q(k), pow_integer(Integer(2), static_cast<unsigned long>(k - 1)));
      }
      EXPECT_EQ(t.convergent(static_cast<long>(n)), evaluate(w));
      EXPECT_EQ(backward_ratio(w), evaluate(w.reversed()));
      auto c = cylinder(w);
      EXPECT_EQ(c.length(), cylinder_length_formula(t));
      Rational qn2(t.q(static_cast<long>(n)) * t.q(static_cast<long>(n)));
      EXPECT_LE(1 / (2 * qn2), c.length());
      EXPECT_LE(c.length(), 1 / qn2);
    });
  }
}

TEST(Properties, LagrangeMinimalityOnSurds) {
  std::mt19937_64 rng(5);
  std::geometric_distribution<long> geo(0.5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Integer> pre, per;
    for (int i = 0; i < 4; ++i) pre.emplace_back(1 + geo(rng));
    per.emplace_back(1 + geo(rng));
    PeriodicWord x{Word(pre), Word(per)};
    ContinuedFractionView v(x, 40);
    QuadraticSurd xv = v.value().exact();
    // best[q] = min_p |q x - p| computed by brute force over p in {floor, ceil}.
    std::vector<QuadraticSurd> best(201);
    for (long q = 1; q <= 200; ++q) {
      QuadraticSurd qx = QuadraticSurd(Integer(q)) * xv;
      Integer f = qx.floor();
      QuadraticSurd d1 = qx - QuadraticSurd(f), d2 = QuadraticSurd(Integer(f + 1)) - qx;
      best[static_cast<std::size_t>(q)] = d1 < d2 ? d1 : d2;
    }
    const auto& t = v.table();
    for (long n = 1; t.q(n) <= 200; ++n) {
      Real target = dirichlet_form(v, static_cast<std::size_t>(n));
      for (long q = 1; q < t.q(n).get_si(); ++q) EXPECT_GE(best[static_cast<std::size_t>(q)], target.exact());
    }
  }
}
