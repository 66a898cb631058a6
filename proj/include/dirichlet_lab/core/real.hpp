#pragma once

#include <variant>

#include "dirichlet_lab/core/interval.hpp"
#include "dirichlet_lab/core/quadratic_surd.hpp"

namespace dirichlet_lab {

// A real number known either exactly (an element of Q or Q(sqrt d)) or only
// through a validated enclosure. Arithmetic keeps exact values exact; mixing
// an exact value with an enclosure produces an enclosure.
class Real {
 public:
  Real() = default;
  Real(const QuadraticSurd& x) : value_(x) {}  // NOLINT(google-explicit-constructor)
  Real(const Rational& x) : value_(QuadraticSurd(x)) {}  // NOLINT(google-explicit-constructor)
  Real(const Integer& x) : value_(QuadraticSurd(x)) {}  // NOLINT(google-explicit-constructor)
  Real(const Interval& x) : value_(x) {}  // NOLINT(google-explicit-constructor)

  bool is_exact() const { return std::holds_alternative<QuadraticSurd>(value_); }
  const QuadraticSurd& exact() const { return std::get<QuadraticSurd>(value_); }
  const Interval& enclosure() const { return std::get<Interval>(value_); }

  // Enclosure at the given dyadic precision (exact values become tight intervals).
  Interval to_interval(unsigned bits = 256) const { return is_exact() ? enclose(exact(), bits) : enclosure(); }

  long double approx() const { return is_exact() ? exact().approx() : to_long_double(enclosure().midpoint()); }

  Real operator-() const {
    return is_exact() ? Real(-exact()) : Real(-enclosure());
  }

  friend Real operator+(const Real& a, const Real& b) { return combine(a, b, [](auto x, auto y) { return x + y; }); }
  friend Real operator-(const Real& a, const Real& b) { return combine(a, b, [](auto x, auto y) { return x - y; }); }
  friend Real operator*(const Real& a, const Real& b) { return combine(a, b, [](auto x, auto y) { return x * y; }); }
  friend Real operator/(const Real& a, const Real& b) { return a * b.reciprocal(); }

  Real reciprocal() const { return is_exact() ? Real(exact().reciprocal()) : Real(enclosure().reciprocal()); }
  Real abs() const { return is_exact() ? Real(exact().abs()) : Real(enclosure().abs()); }

  std::string to_string() const { return is_exact() ? exact().to_string() : enclosure().to_string(); }

 private:
  template <class Op>
  static Real combine(const Real& a, const Real& b, Op op) {
    if (a.is_exact() && b.is_exact()) return Real(op(a.exact(), b.exact()));
    if (a.is_exact() && a.exact().is_rational()) return Real(op(Interval(a.exact().rational_part()), b.enclosure()));
    if (b.is_exact() && b.exact().is_rational()) return Real(op(a.enclosure(), Interval(b.exact().rational_part())));
    return Real(op(a.to_interval(), b.to_interval()));
  }

  std::variant<QuadraticSurd, Interval> value_{QuadraticSurd()};
};

inline Truth less(const Real& a, const Interval& b) {
  return a.is_exact() ? less(a.exact(), b) : less(a.enclosure(), b);
}

inline Truth greater(const Real& a, const Interval& b) {
  return a.is_exact() ? greater(a.exact(), b) : greater(a.enclosure(), b);
}

inline Truth less_equal(const Real& a, const Interval& b) { return !greater(a, b); }
inline Truth greater_equal(const Real& a, const Interval& b) { return !less(a, b); }

}  // namespace dirichlet_lab
