#pragma once

#include <string>
#include <variant>

#include "dirichlet_lab/cf/convergents.hpp"
#include "dirichlet_lab/core/interval.hpp"
#include "dirichlet_lab/core/quadratic_surd.hpp"

namespace dirichlet_lab::cf {

// A point 0 <= p/q < 1 in lowest terms.
struct ExactRational {
  Rational value;

  explicit ExactRational(const Rational& v) : value(v) {
    value.canonicalize();
    require(value >= 0 && value < 1, ErrorKind::DomainViolation, "rational input must lie in [0,1)");
  }
};

// The quadratic surd [pre_1, ..., pre_m, per_1, ..., per_k, per_1, ...].
struct PeriodicWord {
  Word preperiod;
  Word period;

  PeriodicWord(Word pre, Word per) : preperiod(std::move(pre)), period(std::move(per)) {
    require(!period.empty(), ErrorKind::InvalidArgument, "period must be nonempty");
  }
};

// A point known to lie in [lo, hi] with 0 <= lo <= hi < 1.
struct ValidatedInterval {
  Rational lo;
  Rational hi;

  ValidatedInterval(const Rational& l, const Rational& h) : lo(l), hi(h) {
    require(lo >= 0 && lo <= hi && hi < 1, ErrorKind::DomainViolation, "interval input must satisfy 0 <= lo <= hi < 1");
  }

  Interval enclosure() const { return {lo, hi}; }
};

using RealInput = std::variant<ExactRational, PeriodicWord, ValidatedInterval>;

namespace detail {

// Strip small square factors from a radicand so surd coefficients stay small.
inline void reduce_radicand(Integer& d, Integer& root_factor) {
  root_factor = 1;
  for (unsigned long p = 2; p < 2000; ++p) {
    Integer pp(p * p);
    while (mpz_divisible_p(d.get_mpz_t(), pp.get_mpz_t()) != 0) {
      d /= pp;
      root_factor *= p;
    }
  }
}

}  // namespace detail

// Value of the purely periodic expansion [per_1, ..., per_k, per_1, ...].
// It is the positive root of q_{k-1} y^2 + (q_k - p_{k-1}) y - p_k = 0.
inline QuadraticSurd purely_periodic_value(const Word& period) {
  require(!period.empty(), ErrorKind::InvalidArgument, "period must be nonempty");
  ConvergentTable t(period);
  long k = static_cast<long>(period.size());
  Integer b = t.q(k) - t.p(k - 1);
  Integer a = t.q(k - 1);
  Integer disc = b * b + 4 * t.p(k) * a;
  Integer root_factor;
  detail::reduce_radicand(disc, root_factor);
  Rational two_a(2 * a);
  return QuadraticSurd(Rational(-b) / two_a, Rational(root_factor) / two_a, disc);
}

// Exact value of an eventually periodic word.
inline QuadraticSurd surd_value(const PeriodicWord& x) {
  QuadraticSurd v = purely_periodic_value(x.period);
  const auto& pre = x.preperiod.digits();
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) v = (QuadraticSurd(*it) + v).reciprocal();
  return v;
}

// Dyadic enclosure of a decimal literal "0.d1d2...dk" read as x in
// [d - 10^-k/2, d + 10^-k/2], clipped to [0,1).
inline ValidatedInterval interval_from_decimal(const std::string& text) {
  Rational mid = parse_rational(text);
  auto point = text.find('.');
  long k = point == std::string::npos ? 0 : static_cast<long>(text.size() - point - 1);
  Rational half_ulp = pow_rational(Rational(10), -k) / 2;
  unsigned bits = static_cast<unsigned>(k * 3322 / 1000 + 8);
  Rational scale(pow_integer(Integer(2), bits));
  Rational lo = Rational(floor_of((mid - half_ulp) * scale)) / scale;
  Rational hi = Rational(ceil_of((mid + half_ulp) * scale)) / scale;
  if (lo < 0) lo = 0;
  if (hi >= 1) hi = Rational(scale - 1) / scale;
  return {lo, hi};
}

inline ValidatedInterval interval_around(const QuadraticSurd& x, unsigned bits) {
  Interval e = enclose(x, bits);
  return {e.lo(), e.hi()};
}

inline std::string describe(const RealInput& x) {
  struct Visitor {
    std::string operator()(const ExactRational& r) const { return r.value.get_str(); }
    std::string operator()(const PeriodicWord& w) const {
      return "periodic:" + w.preperiod.to_string() + ";" + w.period.to_string();
    }
    std::string operator()(const ValidatedInterval& v) const {
      return "interval:[" + v.lo.get_str() + "," + v.hi.get_str() + "]";
    }
  };
  return std::visit(Visitor{}, x);
}

}  // namespace dirichlet_lab::cf
