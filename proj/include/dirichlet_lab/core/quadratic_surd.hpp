#pragma once

#include <compare>
#include <string>

#include "dirichlet_lab/core/exact.hpp"

namespace dirichlet_lab {

// An element r + s*sqrt(d) of the real quadratic field Q(sqrt(d)).
// d is a positive non-square when s != 0; rationals carry s == 0 and d == 0.
// Mixed arithmetic requires both operands to share d (or one to be rational).
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(const Rational& r) : r_(r) {}  // NOLINT(google-explicit-constructor)
  QuadraticSurd(const Integer& z) : r_(z) {}   // NOLINT(google-explicit-constructor)
  QuadraticSurd(long z) : r_(z) {}             // NOLINT(google-explicit-constructor)

  QuadraticSurd(const Rational& r, const Rational& s, const Integer& d) : r_(r), s_(s), d_(d) {
    require(d > 1 && !is_perfect_square(d), ErrorKind::InvalidArgument, "radicand must be a positive non-square");
    normalize();
  }

  const Rational& rational_part() const { return r_; }
  const Rational& surd_part() const { return s_; }
  const Integer& radicand() const { return d_; }
  bool is_rational() const { return s_ == 0; }

  int sign() const {
    int sr = sgn(r_);
    int ss = sgn(s_);
    if (ss == 0) return sr;
    if (sr >= 0 && ss >= 0) return 1;
    if (sr <= 0 && ss <= 0) return -1;
    // Opposite signs: compare r^2 against s^2 d (never equal, d non-square).
    Rational lhs = r_ * r_;
    Rational rhs = s_ * s_ * d_;
    return lhs > rhs ? sr : ss;
  }

  QuadraticSurd operator-() const {
    QuadraticSurd out(*this);
    out.r_ = -out.r_;
    out.s_ = -out.s_;
    return out;
  }

  friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) {
    QuadraticSurd out;
    out.d_ = common_radicand(a, b);
    out.r_ = a.r_ + b.r_;
    out.s_ = a.s_ + b.s_;
    out.normalize();
    return out;
  }

  friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) { return a + (-b); }

  friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
    QuadraticSurd out;
    out.d_ = common_radicand(a, b);
    out.r_ = a.r_ * b.r_;
    if (out.d_ != 0) out.r_ += a.s_ * b.s_ * out.d_;
    out.s_ = a.r_ * b.s_ + a.s_ * b.r_;
    out.normalize();
    return out;
  }

  QuadraticSurd reciprocal() const {
    require(sign() != 0, ErrorKind::DomainViolation, "reciprocal of zero");
    if (is_rational()) return QuadraticSurd(Rational(1 / r_));
    // 1/(r + s sqrt d) = (r - s sqrt d) / (r^2 - s^2 d)
    Rational norm = r_ * r_ - s_ * s_ * d_;
    QuadraticSurd out;
    out.d_ = d_;
    out.r_ = r_ / norm;
    out.s_ = -s_ / norm;
    out.normalize();
    return out;
  }

  friend QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b) { return a * b.reciprocal(); }

  QuadraticSurd abs() const { return sign() < 0 ? -*this : *this; }

  Integer floor() const {
    if (is_rational()) return floor_of(r_);
    // Write the value as (n1 + n2 sqrt d)/m with m > 0.
    Integer m = r_.get_den() * s_.get_den();
    Integer n1 = r_.get_num() * s_.get_den();
    Integer n2 = s_.get_num() * r_.get_den();
    Integer t;  // floor(n2 sqrt d); n2 sqrt d is never an integer here.
    Integer root = isqrt(n2 * n2 * d_);
    t = n2 >= 0 ? root : Integer(-root - 1);
    return floor_of(make_rational(n1 + t, m));
  }

  friend int compare(const QuadraticSurd& a, const QuadraticSurd& b) { return (a - b).sign(); }
  friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) { return compare(a, b) == 0; }
  friend std::strong_ordering operator<=>(const QuadraticSurd& a, const QuadraticSurd& b) {
    int c = compare(a, b);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  long double approx() const {
    if (is_rational()) return to_long_double(r_);
    long double root = std::sqrt(to_long_double(d_));
    if (sgn(r_) * sgn(s_) >= 0) return to_long_double(r_) + to_long_double(s_) * root;
    // Opposite signs cancel; go through the conjugate, which does not.
    Rational norm = r_ * r_ - s_ * s_ * d_;
    return to_long_double(norm) / (to_long_double(r_) - to_long_double(s_) * root);
  }

  std::string to_string() const {
    if (is_rational()) return r_.get_str();
    return "(" + r_.get_str() + ")+(" + s_.get_str() + ")*sqrt(" + d_.get_str() + ")";
  }

 private:
  static Integer common_radicand(const QuadraticSurd& a, const QuadraticSurd& b) {
    if (a.is_rational()) return b.d_;
    if (b.is_rational()) return a.d_;
    require(a.d_ == b.d_, ErrorKind::InvalidArgument, "surds from different quadratic fields");
    return a.d_;
  }

  void normalize() {
    if (s_ == 0) d_ = 0;
  }

  Rational r_{0};
  Rational s_{0};
  Integer d_{0};
};

}  // namespace dirichlet_lab
