#pragma once

#include <optional>

#include "dirichlet_lab/cf/view.hpp"

namespace dirichlet_lab::cf {

// |q_{n-1} x - p_{n-1}| through the tail identity 1/(q_n + T^n(x) q_{n-1}).
inline Real dirichlet_form(const ContinuedFractionView& v, std::size_t n) {
  require(n >= 1, ErrorKind::InvalidArgument, "dirichlet_form index must be >= 1");
  require(n <= v.digits(), ErrorKind::PrecisionExhausted, "dirichlet_form needs " + std::to_string(n) + " digits");
  const auto& t = v.table();
  long k = static_cast<long>(n);
  return (Real(t.q(k)) + v.tail(n) * Real(t.q(k - 1))).reciprocal();
}

// The same quantity by direct substitution, for cross-checks.
inline Real dirichlet_form_direct(const ContinuedFractionView& v, std::size_t n) {
  const auto& t = v.table();
  long k = static_cast<long>(n);
  return (Real(t.q(k - 1)) * v.value() - Real(t.p(k - 1))).abs();
}

struct LegendreResult {
  bool condition_holds = false;     // |x - p/q| < 1/(2q^2)
  std::optional<std::size_t> index;  // n with p/q = p_n/q_n, if any
};

// Locates p/q among the convergents of x. When |x - p/q| < 1/(2q^2) an index
// must exist; 0/1 is reported as index 0 (the p_0/q_0 convention).
inline LegendreResult legendre_locate(const Integer& p, const Integer& q, const RealInput& x) {
  require(q >= 1, ErrorKind::InvalidPair, "q must be >= 1");
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  require(g == 1, ErrorKind::InvalidPair, "p and q must be coprime");

  std::size_t depth = 2 * mpz_sizeinbase(q.get_mpz_t(), 2) + 4;
  ContinuedFractionView v(x, depth);
  Real gap = (v.value() - Real(make_rational(p, q))).abs();
  Truth cond = less(gap, Interval(make_rational(Integer(1), 2 * q * q)));
  require(cond != Truth::Unknown, ErrorKind::PrecisionExhausted, "Legendre condition undecidable at this precision");

  LegendreResult out;
  out.condition_holds = cond == Truth::True;
  const auto& t = v.table();
  for (std::size_t n = 0; n <= v.digits(); ++n) {
    long k = static_cast<long>(n);
    if (t.q(k) > q) break;
    if (t.p(k) == p && t.q(k) == q) {
      out.index = n;
      break;
    }
  }
  if (out.condition_holds && !out.index && v.precision_exhausted()) {
    fail(ErrorKind::PrecisionExhausted, "not enough certified digits to locate the convergent");
  }
  return out;
}

struct P5Bounds {
  Rational lower;  // 1/(3 a_{n+1} q_n^2)
  Real value;      // |x - p_n/q_n|
  Rational upper;  // 1/(a_{n+1} q_n^2)
  Truth holds;     // lower < value < upper
};

inline P5Bounds p5_bounds_check(const ContinuedFractionView& v, std::size_t n) {
  if (!v.has_digit(n + 1)) {
    if (v.terminated()) fail(ErrorKind::Terminated, "expansion ends before a_" + std::to_string(n + 1));
    fail(ErrorKind::PrecisionExhausted, "a_" + std::to_string(n + 1) + " not certified");
  }
  const auto& t = v.table();
  long k = static_cast<long>(n);
  Integer a = v.digit(n + 1);
  Integer qq = t.q(k) * t.q(k);
  P5Bounds out{make_rational(Integer(1), 3 * a * qq), (v.value() - Real(t.convergent(k))).abs(),
               make_rational(Integer(1), a * qq), Truth::Unknown};
  Truth left = greater(out.value, Interval(out.lower));
  Truth right = less(out.value, Interval(out.upper));
  if (left == Truth::False || right == Truth::False) {
    out.holds = Truth::False;
  } else if (left == Truth::True && right == Truth::True) {
    out.holds = Truth::True;
  }
  return out;
}

}  // namespace dirichlet_lab::cf
