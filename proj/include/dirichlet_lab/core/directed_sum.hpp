#pragma once

// Running sum with a nearest-rounded value and a one-sided enclosure: each
// term enters with a relative error bound, and every addition is pushed one
// ulp outward.

#include <cmath>
#include <limits>

namespace dirichlet_lab {

struct DirectedSum {
  long double value = 0, lower = 0, upper = 0;

  static constexpr long double inf = std::numeric_limits<long double>::infinity();

  void add(long double v, long double rel_err) {
    long double err = std::fabs(v) * rel_err;
    value += v;
    lower = std::nextafter(lower + std::nextafter(v - err, -inf), -inf);
    upper = std::nextafter(upper + std::nextafter(v + err, inf), inf);
  }

  void add(const DirectedSum& other) {
    value += other.value;
    lower = std::nextafter(lower + other.lower, -inf);
    upper = std::nextafter(upper + other.upper, inf);
  }

  // Error bound for exp() of a quantity assembled from logs of size `magnitude`.
  static long double log_space_error(long double magnitude) {
    return 32 * std::numeric_limits<long double>::epsilon() * (4 + magnitude);
  }
};

}  // namespace dirichlet_lab
