#pragma once

// Arbitrary-precision integers and rationals (GMP) plus the few helpers the
// rest of the library needs: floor/ceil, integer powers, exact decimal parsing.

#include <gmpxx.h>
#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "dirichlet_lab/core/error.hpp"

namespace dirichlet_lab {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  require(den != 0, ErrorKind::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer floor_of(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

inline Integer ceil_of(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer pow_integer(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

// base^exponent for an integral exponent of either sign.
inline Rational pow_rational(const Rational& base, long exponent) {
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Rational r(pow_integer(base.get_num(), e), pow_integer(base.get_den(), e));
  r.canonicalize();
  if (exponent < 0) {
    require(r != 0, ErrorKind::DomainViolation, "zero to a negative power");
    r = 1 / r;
  }
  return r;
}

inline Integer isqrt(const Integer& n) {
  Integer out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

inline bool is_perfect_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Exact parse of "p/q", "-12", "0.25", "1e6", "2.5E-3" into a rational.
inline Rational parse_rational(std::string_view text) {
  auto bad = [&] { fail(ErrorKind::ParseError, "not a rational literal: '" + std::string(text) + "'"); };
  if (text.empty()) bad();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (!is_integer(num) || !is_integer(den) || den == 0) bad();
    return make_rational(num.get_num(), den.get_num());
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long scale = 0;
  bool seen_digit = false, seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) bad();
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') bad();
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    if (i == text.size()) bad();
    long e = 0;
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) bad();
      e = e * 10 + (text[i] - '0');
      if (e > 100000) bad();
    }
    scale += exp_negative ? -e : e;
  }
  Integer mantissa(digits, 10);
  Rational r(mantissa);
  r *= pow_rational(Rational(10), scale);
  if (negative) r = -r;
  return r;
}

inline Integer parse_integer(std::string_view text) {
  Rational r = parse_rational(text);
  require(is_integer(r), ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
  return r.get_num();
}

inline long double to_long_double(const Rational& q) {
  mpfr_t tmp;
  mpfr_init2(tmp, 64);
  mpfr_set_q(tmp, q.get_mpq_t(), MPFR_RNDN);
  long double out = mpfr_get_ld(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return out;
}

inline long double to_long_double(const Integer& z) { return to_long_double(Rational(z)); }

// Natural logarithm of a positive integer, valid far beyond long double range of z itself.
inline long double log_of(const Integer& z) {
  require(z > 0, ErrorKind::DomainViolation, "log of non-positive integer");
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(static_cast<long double>(mant)) + static_cast<long double>(exp2) * 0.693147180559945309417232121458176568L;
}

}  // namespace dirichlet_lab
