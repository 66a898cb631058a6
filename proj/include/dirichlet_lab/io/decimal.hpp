#pragma once

// Report numerics are decimal strings. Exact values keep their exact form,
// enclosures are rounded outward, floats print with 21 significant digits.

#include <cmath>
#include <cstdio>
#include <string>

#include "dirichlet_lab/core/interval.hpp"

namespace dirichlet_lab::io {

inline constexpr int kDigits = 21;

inline std::string decimal(long double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Le", kDigits - 1, v);
  return buf;
}

// r rounded down (or up) to `digits` significant decimal digits.
inline std::string decimal_directed(const Rational& r, bool up, int digits = kDigits) {
  if (r == 0) return "0";
  if (r < 0) {
    std::string s = decimal_directed(-r, !up, digits);
    return "-" + s;
  }
  long e = static_cast<long>(mpz_sizeinbase(r.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(r.get_den_mpz_t(), 10));
  while (r < pow_rational(Rational(10), e)) --e;
  while (r >= pow_rational(Rational(10), e + 1)) ++e;
  Rational scaled = r * pow_rational(Rational(10), digits - 1 - e);
  Integer m = up ? ceil_of(scaled) : floor_of(scaled);
  Integer top = pow_integer(Integer(10), static_cast<unsigned long>(digits));
  if (m == top) {
    m /= 10;
    ++e;
  }
  std::string d = m.get_str();
  std::string out = d.substr(0, 1);
  if (digits > 1) out += "." + d.substr(1);
  char exp[16];
  std::snprintf(exp, sizeof exp, "e%+03ld", e);
  return out + exp;
}

}  // namespace dirichlet_lab::io
