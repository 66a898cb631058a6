#pragma once

// Lower order tau = liminf log Psi(t)/log t on a geometric grid, the
// dimension value 2/(2+tau), and the numerical critical exponent of
// sum_t t (t^2 Psi(t))^-s.

#include <cmath>
#include <optional>
#include <vector>

#include "dirichlet_lab/core/parallel.hpp"
#include "dirichlet_lab/sets/functions.hpp"

namespace dirichlet_lab::criteria {

struct TauPoint {
  unsigned j = 0;          // t_j = 2^j
  long double ratio = 0;   // log Psi(t_j) / log t_j
};

struct TauEstimate {
  std::vector<TauPoint> grid;
  std::vector<long double> tail_running_min;  // over the second half of the grid
  long double tau_hat = 0;
  std::optional<Rational> declared_tau;
};

inline TauEstimate tau_liminf(const sets::AuxFunction& aux, unsigned j0 = 4, unsigned j_max = 256) {
  require(j0 >= 1 && j0 < j_max, ErrorKind::InvalidArgument, "tau grid needs 1 <= j0 < j_max");
  long double t0 = to_long_double(aux.t0());
  while (std::ldexp(1.0L, static_cast<int>(j0)) < t0) ++j0;
  require(j0 < j_max, ErrorKind::InvalidArgument, "tau grid starts beyond j_max");
  TauEstimate out;
  const long double ln2 = std::log(2.0L);
  for (unsigned j = j0; j <= j_max; ++j) {
    long double L = j * ln2;
    long double lp = aux.log_value(L);
    require(std::isfinite(lp), ErrorKind::DomainViolation, "Psi(2^" + std::to_string(j) + ") <= 0");
    out.grid.push_back({j, lp / L});
  }
  std::size_t half = out.grid.size() / 2;
  long double m = std::numeric_limits<long double>::infinity();
  for (std::size_t i = half; i < out.grid.size(); ++i) {
    m = std::min(m, out.grid[i].ratio);
    out.tail_running_min.push_back(m);
  }
  out.tau_hat = m;
  if (auto a = aux.asymptotics()) out.declared_tau = a->tau;
  return out;
}

inline long double dimension_of_complement(long double tau) {
  require(tau >= 0, ErrorKind::DomainViolation, "tau must be >= 0");
  return 2 / (2 + tau);
}

struct CriticalPoint {
  std::uint64_t Q = 0;
  std::optional<double> s_star;
};

struct CriticalExponent {
  double theta = 1;                 // threshold on the normalized sum
  std::vector<CriticalPoint> trace;  // increasing Q, last entry is the requested Q
  std::optional<double> s_star;     // at the requested Q
  std::optional<double> target;     // 2/(2+tau) from the declared family tau
  std::vector<std::string> notes;
};

namespace detail {

// (1/log Q) sum_{t <= Q, t^2 Psi >= 1} t (t^2 Psi)^-s evaluated in fixed blocks.
class NormalizedSum {
 public:
  NormalizedSum(const sets::AuxFunction& aux, std::uint64_t Q, unsigned threads) : threads_(threads) {
    std::uint64_t start = std::max<std::uint64_t>(1, ceil_of(aux.t0()).get_ui());
    for (std::uint64_t t = start; t <= Q; ++t) {
      double L = std::log(static_cast<double>(t));
      double b = 2 * L + static_cast<double>(aux.log_value(L));
      if (b < 0) continue;
      log_t_.push_back(L);
      log_base_.push_back(b);
    }
    norm_ = std::log(static_cast<double>(Q));
  }

  double operator()(double s) const {
    const std::size_t bs = 65536;
    std::size_t count = (log_t_.size() + bs - 1) / bs;
    std::vector<double> partial(count, 0.0);
    parallel_for(count, threads_, [&](std::size_t i) {
      double acc = 0;
      for (std::size_t k = i * bs; k < std::min(log_t_.size(), (i + 1) * bs); ++k)
        acc += std::exp(log_t_[k] - s * log_base_[k]);
      partial[i] = acc;
    });
    double total = 0;
    for (double p : partial) total += p;
    return total / norm_;
  }

 private:
  std::vector<double> log_t_, log_base_;
  double norm_ = 1;
  unsigned threads_;
};

inline std::optional<double> bisect_threshold(const NormalizedSum& F, double theta) {
  if (F(1.0) > theta) return std::nullopt;
  double lo = 0, hi = 1;  // F(lo) > theta >= F(hi)
  for (int i = 0; i < 60; ++i) {
    double mid = (lo + hi) / 2;
    (F(mid) > theta ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace detail

inline CriticalExponent critical_exponent(const sets::AuxFunction& aux, std::uint64_t Q, unsigned threads = 1) {
  require(Q >= 1000, ErrorKind::InvalidArgument, "critical exponent needs Q >= 1000");
  CriticalExponent out;
  std::vector<std::uint64_t> qs;
  for (std::uint64_t q = 1000; q < Q; q *= 10) qs.push_back(q);
  qs.push_back(Q);
  for (auto q : qs) {
    detail::NormalizedSum F(aux, q, threads);
    out.trace.push_back({q, detail::bisect_threshold(F, out.theta)});
  }
  out.s_star = out.trace.back().s_star;
  if (!out.s_star) out.notes.push_back("normalized sum exceeds the threshold at s = 1; no crossing in (0, 1)");
  if (auto a = aux.asymptotics()) out.target = 2.0 / (2.0 + to_long_double(a->tau));
  return out;
}

}  // namespace dirichlet_lab::criteria
