#pragma once

#include "dirichlet_lab/cf/convergents.hpp"

namespace dirichlet_lab::cf {

// I_n(a_1..a_n): the points of [0,1) whose expansion starts with the word.
// Even n: [p_n/q_n, (p_n+p_{n-1})/(q_n+q_{n-1})); odd n: the reverse, closed on the right.
struct Cylinder {
  Word word;
  Rational left;
  Rational right;
  bool left_closed = false;
  bool right_closed = false;

  Rational length() const { return right - left; }

  bool contains(const Rational& x) const {
    bool above = left_closed ? x >= left : x > left;
    bool below = right_closed ? x <= right : x < right;
    return above && below;
  }

  // Closure containment is enough for nesting checks.
  bool contains(const Cylinder& inner) const { return left <= inner.left && inner.right <= right; }

  bool disjoint_from(const Cylinder& other) const {
    if (right < other.left || other.right < left) return true;
    if (right == other.left) return !(right_closed && other.left_closed);
    if (other.right == left) return !(other.right_closed && left_closed);
    return false;
  }
};

inline Cylinder cylinder(const Word& w) {
  require(!w.empty(), ErrorKind::EmptyWord, "cylinder needs a nonempty word");
  ConvergentTable t(w);
  long n = static_cast<long>(w.size());
  Rational near = make_rational(t.p(n), t.q(n));
  Rational far = make_rational(t.p(n) + t.p(n - 1), t.q(n) + t.q(n - 1));
  Cylinder c;
  c.word = w;
  if (n % 2 == 0) {
    c.left = near;
    c.right = far;
    c.left_closed = true;
  } else {
    c.left = far;
    c.right = near;
    c.right_closed = true;
  }
  return c;
}

// 1/(q_n (q_n + q_{n-1})), the closed-form cylinder length.
inline Rational cylinder_length_formula(const ConvergentTable& t) {
  long n = static_cast<long>(t.depth());
  return make_rational(Integer(1), t.q(n) * (t.q(n) + t.q(n - 1)));
}

}  // namespace dirichlet_lab::cf
