#pragma once

// Validated elementary functions on rational intervals. Each function rounds
// its lower endpoint down and its upper endpoint up through MPFR, so the
// returned interval always encloses the exact image.

#include <mpfr.h>

#include "dirichlet_lab/core/interval.hpp"

namespace dirichlet_lab {

inline constexpr unsigned kDefaultPrecisionBits = 256;

namespace detail {

class Mpfr {
 public:
  explicit Mpfr(unsigned bits) { mpfr_init2(value_, static_cast<mpfr_prec_t>(bits)); }
  ~Mpfr() { mpfr_clear(value_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  void set(const Rational& q, mpfr_rnd_t rnd) { mpfr_set_q(value_, q.get_mpq_t(), rnd); }

  Rational to_rational() const {
    require(mpfr_number_p(value_) != 0, ErrorKind::DomainViolation, "non-finite value in enclosure");
    Rational out;
    mpfr_get_q(out.get_mpq_t(), value_);
    return out;
  }

 private:
  mpfr_t value_;
};

using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

inline Rational round_fn(UnaryFn fn, const Rational& x, unsigned bits, mpfr_rnd_t rnd) {
  Mpfr in(bits + 16), out(bits);
  in.set(x, rnd);
  fn(out.get(), in.get(), rnd);
  return out.to_rational();
}

// Image of a monotone increasing function.
inline Interval increasing_image(UnaryFn fn, const Interval& x, unsigned bits) {
  return {round_fn(fn, x.lo(), bits, MPFR_RNDD), round_fn(fn, x.hi(), bits, MPFR_RNDU)};
}

}  // namespace detail

inline Interval log(const Interval& x, unsigned bits = kDefaultPrecisionBits) {
  require(x.lo() > 0, ErrorKind::DomainViolation, "log of a non-positive value");
  if (x.is_point() && x.lo() == 1) return Interval(0);
  return detail::increasing_image(&mpfr_log, x, bits);
}

inline Interval log1p(const Interval& x, unsigned bits = kDefaultPrecisionBits) {
  require(x.lo() > -1, ErrorKind::DomainViolation, "log1p argument <= -1");
  return detail::increasing_image(&mpfr_log1p, x, bits);
}

inline Interval exp(const Interval& x, unsigned bits = kDefaultPrecisionBits) {
  if (x.is_point() && x.lo() == 0) return Interval(1);
  return detail::increasing_image(&mpfr_exp, x, bits);
}

// Enclosure of base^exponent for base > 0 (base >= 0 when the exponent is a
// non-negative integer). Integral exponents are exact.
inline Interval pow(const Interval& base, const Rational& exponent, unsigned bits = kDefaultPrecisionBits) {
  if (is_integer(exponent) && mpz_fits_slong_p(exponent.get_num_mpz_t())) {
    long e = exponent.get_num().get_si();
    if (e == 0) return Interval(1);
    require(base.lo() >= 0, ErrorKind::DomainViolation, "power of a negative value");
    Rational a = pow_rational(base.lo(), e);
    Rational b = pow_rational(base.hi(), e);
    return e > 0 ? Interval(a, b) : Interval(b, a);
  }
  require(base.lo() > 0, ErrorKind::DomainViolation, "non-integral power of a non-positive value");
  // exact when the base is a perfect power of the denominator's degree
  if (base.is_point() && mpz_fits_ulong_p(exponent.get_den_mpz_t()) && exponent.get_num() != 0) {
    unsigned long k = exponent.get_den().get_ui();
    Integer rn, rd;
    bool exact_n = mpz_root(rn.get_mpz_t(), base.lo().get_num_mpz_t(), k) != 0;
    bool exact_d = mpz_root(rd.get_mpz_t(), base.lo().get_den_mpz_t(), k) != 0;
    if (exact_n && exact_d) return pow(Interval(make_rational(rn, rd)), Rational(exponent.get_num()), bits);
  }
  Interval l = log(base, bits + 32);
  return exp(l * Interval(exponent), bits);
}

}  // namespace dirichlet_lab
