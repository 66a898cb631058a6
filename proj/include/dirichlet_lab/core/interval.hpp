#pragma once

#include <algorithm>
#include <string>

#include "dirichlet_lab/core/exact.hpp"
#include "dirichlet_lab/core/quadratic_surd.hpp"

namespace dirichlet_lab {

// Three-valued outcome of a comparison that may be undecidable at the
// available precision.
enum class Truth { False, True, Unknown };

constexpr Truth truth(bool b) { return b ? Truth::True : Truth::False; }

constexpr Truth operator!(Truth t) {
  return t == Truth::Unknown ? Truth::Unknown : (t == Truth::True ? Truth::False : Truth::True);
}

constexpr const char* to_string(Truth t) {
  return t == Truth::True ? "true" : t == Truth::False ? "false" : "undecided";
}

// Closed interval [lo, hi] with exact rational endpoints. Arithmetic is exact
// on the endpoints, so the result always encloses every possible value.
class Interval {
 public:
  Interval() = default;
  Interval(const Rational& point) : lo_(point), hi_(point) {}  // NOLINT(google-explicit-constructor)
  Interval(const Integer& point) : lo_(point), hi_(point) {}   // NOLINT(google-explicit-constructor)
  Interval(long point) : lo_(point), hi_(point) {}             // NOLINT(google-explicit-constructor)
  Interval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
    require(lo <= hi, ErrorKind::InvalidArgument, "interval with lo > hi");
  }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_point() const { return lo_ == hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return lo_ <= 0 && hi_ >= 0; }

  Interval operator-() const { return {-hi_, -lo_}; }

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo_ + b.lo_, a.hi_ + b.hi_}; }
  friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo_ - b.hi_, a.hi_ - b.lo_}; }

  friend Interval operator*(const Interval& a, const Interval& b) {
    Rational c1 = a.lo_ * b.lo_, c2 = a.lo_ * b.hi_, c3 = a.hi_ * b.lo_, c4 = a.hi_ * b.hi_;
    return {std::min({c1, c2, c3, c4}), std::max({c1, c2, c3, c4})};
  }

  Interval reciprocal() const {
    require(!contains_zero(), ErrorKind::PrecisionExhausted, "reciprocal of an interval containing zero");
    return {1 / hi_, 1 / lo_};
  }

  friend Interval operator/(const Interval& a, const Interval& b) { return a * b.reciprocal(); }

  Interval abs() const {
    if (lo_ >= 0) return *this;
    if (hi_ <= 0) return -*this;
    return {Rational(0), std::max(Rational(-lo_), hi_)};
  }

  // Hull of two intervals.
  friend Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_)};
  }

  std::string to_string() const { return "[" + lo_.get_str() + ", " + hi_.get_str() + "]"; }

 private:
  Rational lo_{0};
  Rational hi_{0};
};

inline Truth less(const Interval& a, const Interval& b) {
  if (a.hi() < b.lo()) return Truth::True;
  if (a.lo() >= b.hi()) return Truth::False;
  return Truth::Unknown;
}

inline Truth less_equal(const Interval& a, const Interval& b) {
  if (a.hi() <= b.lo()) return Truth::True;
  if (a.lo() > b.hi()) return Truth::False;
  return Truth::Unknown;
}

inline Truth greater(const Interval& a, const Interval& b) { return less(b, a); }
inline Truth greater_equal(const Interval& a, const Interval& b) { return less_equal(b, a); }

inline Truth less(const QuadraticSurd& a, const Interval& b) {
  if (compare(a, QuadraticSurd(b.lo())) < 0) return Truth::True;
  if (compare(a, QuadraticSurd(b.hi())) >= 0) return Truth::False;
  return Truth::Unknown;
}

inline Truth greater(const QuadraticSurd& a, const Interval& b) {
  if (compare(a, QuadraticSurd(b.hi())) > 0) return Truth::True;
  if (compare(a, QuadraticSurd(b.lo())) <= 0) return Truth::False;
  return Truth::Unknown;
}

// Dyadic enclosure of a surd: [k/2^bits, (k+1)/2^bits] with k = floor(x 2^bits).
inline Interval enclose(const QuadraticSurd& x, unsigned bits) {
  if (x.is_rational()) return Interval(x.rational_part());
  Rational scale(pow_integer(Integer(2), bits));
  Integer k = (x * QuadraticSurd(scale)).floor();
  return {Rational(k) / scale, Rational(k + 1) / scale};
}

}  // namespace dirichlet_lab
