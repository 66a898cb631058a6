#pragma once

// Certificates for essential sub-linearity, limsup_{x->0} f(Bx)/f(x) < B, and
// the two consequences used downstream: f(x)/x -> oo and quasi-monotonicity
// of f(x)/x with constant C <= B^2.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "dirichlet_lab/criteria/dimension_function.hpp"

namespace dirichlet_lab::criteria {

struct SublinearityCertificate {
  bool essentially_sublinear = false;
  long double B = 0, b = 0, x0 = 0;
  long double C = 1;               // measured quasi-monotonicity constant
  long double sampled_max = 0;     // max of f(Bx)/f(x) over the grid
  std::optional<long double> declared_limsup;
  std::string reason;
};

inline std::vector<long double> default_b_grid() { return {2, 4, 8}; }

// x_k = 2^-k, k = 1..200
inline std::vector<long double> default_x_grid() {
  std::vector<long double> g;
  for (int k = 1; k <= 200; ++k) g.push_back(std::ldexp(1.0L, -k));
  return g;
}

namespace detail {

inline long double ratio_at(const DimensionFunction& f, long double B, long double x) {
  return std::exp(f.log_value(std::log(B) + std::log(x)) - f.log_value(std::log(x)));
}

// max over x1 <= x2 on the grid of (f(x2)/x2) / (f(x1)/x1); at least 1.
inline long double quasi_monotonicity(const DimensionFunction& f, std::vector<long double> xs) {
  std::sort(xs.begin(), xs.end());
  long double C = 1, running_min = std::numeric_limits<long double>::infinity();
  for (long double x : xs) {
    long double g = f.log_value(std::log(x)) - std::log(x);  // log(f(x)/x)
    running_min = std::min(running_min, g);
    C = std::max(C, std::exp(g - running_min));
  }
  return C;
}

// Undeclared custom functions: gaps B - ratio that shrink steadily toward 0
// indicate limsup = B.
inline bool gap_closing(const std::vector<long double>& gaps) {
  if (gaps.size() < 8) return true;
  std::size_t half = gaps.size() / 2;
  bool shrinking = true;
  for (std::size_t i = half + 1; i < gaps.size(); ++i) shrinking = shrinking && gaps[i] <= gaps[i - 1] * (1 + 1e-12L);
  return shrinking && gaps.back() < 0.5L * gaps[half];
}

}  // namespace detail

inline SublinearityCertificate certify_sublinear(const DimensionFunction& f,
                                                 const std::vector<long double>& b_grid = default_b_grid(),
                                                 const std::vector<long double>& x_grid = default_x_grid()) {
  require(!x_grid.empty(), ErrorKind::InvalidArgument, "empty x grid");
  for (std::size_t i = 1; i < x_grid.size(); ++i)
    require(x_grid[i] < x_grid[i - 1], ErrorKind::InvalidArgument, "x grid must decrease toward 0");
  SublinearityCertificate best;
  best.reason = "no B in the grid has a ratio bound below B";
  for (long double B : b_grid) {
    require(B > 1, ErrorKind::InvalidArgument, "B must exceed 1");
    SublinearityCertificate c;
    c.B = B;
    c.x0 = x_grid.front();
    std::vector<long double> gaps;
    for (long double x : x_grid) {
      long double r = detail::ratio_at(f, B, x);
      c.sampled_max = std::max(c.sampled_max, r);
      gaps.push_back(B - r);
    }
    c.declared_limsup = f.ratio_limsup(B);
    c.b = c.sampled_max;
    if (c.declared_limsup) {
      c.b = std::max(c.b, *c.declared_limsup);
    } else if (detail::gap_closing(gaps)) {
      c.reason = "sampled ratios approach B";
      best = c;
      continue;
    }
    if (c.b < B * (1 - 1e-12L)) {
      c.essentially_sublinear = true;
      c.C = detail::quasi_monotonicity(f, x_grid);
      c.reason = "sampled and declared ratios below " + std::to_string(static_cast<double>(c.b));
      return c;
    }
    c.reason = "ratio bound reaches B";
    best = c;
  }
  return best;
}

struct SublinearConsequences {
  bool applicable = false;
  bool unbounded_ratio = false;  // f(x)/x grows like (B/b)^n along x0/B^n
  bool quasi_monotone = false;   // measured C <= B^2
  long double measured_c = 0;
  long double bound = 0;         // B^2
  bool certificate_valid = false;
  std::vector<std::string> violations;
};

inline SublinearConsequences sublinear_consequences(const DimensionFunction& f, const SublinearityCertificate& cert,
                                                    unsigned steps = 60) {
  SublinearConsequences out;
  if (!cert.essentially_sublinear) return out;
  out.applicable = true;
  long double log_g0 = f.log_value(std::log(cert.x0)) - std::log(cert.x0);
  out.unbounded_ratio = true;
  for (unsigned n = 1; n <= steps; ++n) {
    long double x = cert.x0 / std::pow(cert.B, static_cast<long double>(n));
    long double log_g = f.log_value(std::log(x)) - std::log(x);
    long double need = log_g0 + n * std::log(cert.B / cert.b);
    if (log_g < need - 1e-9L * (1 + std::fabs(need))) {
      out.unbounded_ratio = false;
      out.violations.push_back("growth bound fails at x0/B^" + std::to_string(n));
      break;
    }
  }
  out.measured_c = cert.C;
  out.bound = cert.B * cert.B;
  out.quasi_monotone = cert.C <= out.bound;
  if (!out.quasi_monotone) out.violations.push_back("measured C exceeds B^2");
  out.certificate_valid = out.unbounded_ratio && out.quasi_monotone;
  return out;
}

}  // namespace dirichlet_lab::criteria
