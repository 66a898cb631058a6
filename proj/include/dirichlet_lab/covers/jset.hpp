#pragma once

// J_n(a_1..a_n): the points of the n-cylinder whose next digit exceeds
// Psi(q_n)/a_n. With m the least admissible digit it is the interval between
// p_n/q_n (excluded) and (m p_n + p_{n-1})/(m q_n + q_{n-1}) (included).

#include "dirichlet_lab/cf/cylinder.hpp"
#include "dirichlet_lab/sets/functions.hpp"

namespace dirichlet_lab::covers {

struct JSet {
  cf::Word base;
  Interval threshold;  // Psi(q_n) / a_n
  Integer first_digit;  // least integer a_{n+1} > threshold
  Rational left, right;
  bool left_closed = false, right_closed = false;
  Rational diameter;       // 1/(q_n (m q_n + q_{n-1}))
  Interval diameter_bound;  // 1/(Psi(q_n) q_{n-1} q_n)
  Truth bound_holds = Truth::Unknown;
  bool full_subcylinder = false;  // threshold < 1: every digit qualifies
};

inline JSet j_set(const cf::Word& w, const sets::AuxFunction& aux, unsigned bits = kDefaultPrecisionBits,
                  unsigned max_bits = 8192) {
  require(w.size() >= 1, ErrorKind::EmptyWord, "j_set needs a nonempty word");
  cf::ConvergentTable t(w);
  long n = static_cast<long>(w.size());
  const Integer &qn = t.q(n), &qm = t.q(n - 1), &pn = t.p(n), &pm = t.p(n - 1);
  require(aux.in_domain(qn), ErrorKind::DomainViolation, "q_n = " + qn.get_str() + " below t0 of Psi");

  JSet out;
  out.base = w;
  Interval psi;
  for (;; bits *= 2) {
    psi = aux.value(qn, bits);
    out.threshold = psi * Interval(make_rational(Integer(1), w.digit(w.size())));
    Integer a = floor_of(out.threshold.lo()), b = floor_of(out.threshold.hi());
    if (a == b || out.threshold.is_point()) {
      out.first_digit = a + 1;
      break;
    }
    require(bits * 2 <= max_bits, ErrorKind::PrecisionExhausted, "threshold too close to an integer");
  }
  const Integer& m = out.first_digit;
  Rational inner = make_rational(pn, qn);
  Rational outer = make_rational(m * pn + pm, m * qn + qm);
  bool inner_left = inner < outer;
  out.left = inner_left ? inner : outer;
  out.right = inner_left ? outer : inner;
  out.left_closed = !inner_left;
  out.right_closed = inner_left;
  out.diameter = make_rational(Integer(1), qn * (m * qn + qm));
  require(out.diameter == out.right - out.left, ErrorKind::InvalidArgument, "j_set endpoint identity failed");
  out.diameter_bound = (psi * Interval(Integer(qm * qn))).reciprocal();
  out.bound_holds = less_equal(Interval(out.diameter), out.diameter_bound);
  out.full_subcylinder = m == 1;
  return out;
}

}  // namespace dirichlet_lab::covers
