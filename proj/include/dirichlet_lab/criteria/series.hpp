#pragma once

// Series behind the zero-infinity laws, with verdicts that come from the
// declared asymptotics of Psi and f, never from partial sums alone.
//
// Every supported summand behaves like K t^-alpha (log t)^-beta (log log t)^-gamma
// times a factor rho(t) -> 1. The verdict follows from (alpha, beta, gamma);
// tail envelopes are rho-range times integral-test bounds on the comparison
// function; partial sums carry directed-rounding enclosures.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cfloat>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dirichlet_lab/core/parallel.hpp"
#include "dirichlet_lab/criteria/dimension_function.hpp"

namespace dirichlet_lab::criteria {

using sets::AuxFunction;

enum class Convergence { Converges, Diverges, Undecided };

inline std::string to_string(Convergence c) {
  switch (c) {
    case Convergence::Converges: return "Converges";
    case Convergence::Diverges: return "Diverges";
    case Convergence::Undecided: return "Undecided";
  }
  return "?";
}

// hausdorff: t f(1/(t^2 Psi))      kw, lebesgue: log Psi / (t Psi)
// weak, xlogx-lower: log t/(t Psi) xlogx-upper: log^2 t/(t Psi)
// simmons: log t log Psi / (t Psi)
enum class SeriesKind { Hausdorff, KW, Weak, Lebesgue, XLogXUpper, XLogXLower, Simmons };

inline std::string to_string(SeriesKind k) {
  switch (k) {
    case SeriesKind::Hausdorff: return "hausdorff";
    case SeriesKind::KW: return "kw";
    case SeriesKind::Weak: return "weak";
    case SeriesKind::Lebesgue: return "lebesgue";
    case SeriesKind::XLogXUpper: return "xlogx-upper";
    case SeriesKind::XLogXLower: return "xlogx-lower";
    case SeriesKind::Simmons: return "simmons";
  }
  return "?";
}

inline SeriesKind parse_series_kind(const std::string& s) {
  for (auto k : {SeriesKind::Hausdorff, SeriesKind::KW, SeriesKind::Weak, SeriesKind::Lebesgue,
                 SeriesKind::XLogXUpper, SeriesKind::XLogXLower, SeriesKind::Simmons})
    if (to_string(k) == s) return k;
  fail(ErrorKind::ParseError, "unknown series kind '" + s + "'");
}

// t^-alpha (log t)^-beta (log log t)^-gamma
struct Rate {
  Rational alpha, beta, gamma;

  bool summable() const {
    if (alpha != 1) return alpha > 1;
    if (beta != 1) return beta > 1;
    return gamma > 1;
  }

  std::string describe() const {
    return "t^-(" + alpha.get_str() + ") (log t)^-(" + beta.get_str() + ") (log log t)^-(" + gamma.get_str() + ")";
  }

  // Growth of the partial sums when not summable.
  std::string divergence_rate() const {
    if (alpha < 1) return "T^(" + Rational(1 - alpha).get_str() + ")";
    if (alpha > 1) return "bounded";
    if (beta < 1) return "(log T)^(" + Rational(1 - beta).get_str() + ")";
    if (beta > 1) return "bounded";
    if (gamma < 1) return "(log log T)^(" + Rational(1 - gamma).get_str() + ")";
    if (gamma == 1) return "log log log T";
    return "bounded";
  }
};

struct BlockRow {
  std::uint64_t t_end = 0;
  long double partial = 0, lower = 0, upper = 0;
};

struct SeriesOptions {
  unsigned threads = 1;
  std::uint64_t block_size = 65536;
};

struct SeriesVerdict {
  SeriesKind kind = SeriesKind::Hausdorff;
  Convergence verdict = Convergence::Undecided;
  std::uint64_t t_start = 1, cutoff = 0;
  long double partial_sum = 0, partial_lower = 0, partial_upper = 0;
  std::optional<Rate> rate;
  long double tail_lower = 0, tail_upper = std::numeric_limits<long double>::infinity();
  long double total_lower = 0, total_upper = std::numeric_limits<long double>::infinity();
  long double ratio_min = 0, ratio_max = 0;  // range of rho on [cutoff, oo)
  bool ratio_monotone = false;
  std::string justification = "none";
  std::string divergence_rate;
  std::vector<BlockRow> blocks;
  std::vector<std::string> notes;

  bool has_analytic_envelope() const { return justification != "none"; }
};

namespace detail {

inline long double add_down(long double a, long double b) {
  return std::nextafter(a + b, -std::numeric_limits<long double>::infinity());
}
inline long double add_up(long double a, long double b) {
  return std::nextafter(a + b, std::numeric_limits<long double>::infinity());
}

struct Term {
  int sign = 0;            // -1, 0, +1
  long double log_abs = 0;  // log |term|
  long double magnitude = 0;  // scale of the logs involved, for the error bound
};

class Summand {
 public:
  Summand(SeriesKind kind, const AuxFunction& aux, const DimensionFunction* f) : kind_(kind), aux_(aux), f_(f) {
    switch (kind) {
      case SeriesKind::KW:
      case SeriesKind::Lebesgue: e_log_t_ = 0, e_log_psi_ = 1; break;
      case SeriesKind::Weak:
      case SeriesKind::XLogXLower: e_log_t_ = 1, e_log_psi_ = 0; break;
      case SeriesKind::XLogXUpper: e_log_t_ = 2, e_log_psi_ = 0; break;
      case SeriesKind::Simmons: e_log_t_ = 1, e_log_psi_ = 1; break;
      case SeriesKind::Hausdorff: break;
    }
  }

  Term at(long double L) const {
    long double lp = aux_.log_value(L);
    require(std::isfinite(lp), ErrorKind::DomainViolation, "Psi(t) <= 0 or not finite");
    Term out;
    if (kind_ == SeriesKind::Hausdorff) {
      out.sign = 1;
      out.log_abs = L + f_->log_value(-2 * L - lp);
    } else {
      out.sign = 1;
      out.log_abs = -L - lp;
      if (e_log_t_ > 0) {
        if (L == 0) return Term{0, 0, 0};
        out.log_abs += e_log_t_ * std::log(L);
      }
      if (e_log_psi_ > 0) {
        if (lp == 0) return Term{0, 0, 0};
        if (lp < 0) out.sign = -1;
        out.log_abs += std::log(std::fabs(lp));
      }
    }
    out.magnitude = std::fabs(L) + std::fabs(lp) + std::fabs(out.log_abs);
    return out;
  }

  // Rate of the comparison function and log of the leading constant K, or
  // nullopt (with a reason) when the families declare no asymptotics.
  struct Leading {
    std::optional<Rate> rate;
    long double log_k = 0;
    bool rho_unbounded = false;  // rho grows (triple-log factor); only lower bounds are valid
    std::string reason;
  };

  Leading leading() const {
    Leading out;
    auto asym = aux_.asymptotics();
    if (!asym) {
      out.reason = "Psi has no declared asymptotics (table family)";
      return out;
    }
    const Rational &tau = asym->tau, &lam = asym->lambda, &mu = asym->mu;
    if (kind_ == SeriesKind::Hausdorff) {
      auto fr = f_->rate();
      if (!fr) {
        out.reason = "custom dimension function without a declared envelope";
        return out;
      }
      if (f_->is_power(Rational(0))) {
        out.rate = Rate{Rational(-1), Rational(0), Rational(0)};
        return out;
      }
      out.rate = Rate{fr->sigma * (2 + tau) - 1, fr->sigma * lam - fr->kappa, fr->sigma * mu};
      out.log_k = fr->log_c - to_long_double(fr->sigma) * asym->log_k +
                  to_long_double(fr->kappa) * std::log(2 + to_long_double(tau));
      return out;
    }
    Rate r{1 + tau, lam - e_log_t_, mu};
    out.log_k = -asym->log_k;
    if (e_log_psi_ > 0) {
      if (tau > 0) {
        r.beta -= e_log_psi_;
        out.log_k += e_log_psi_ * std::log(to_long_double(tau));
      } else if (lam > 0) {
        r.gamma -= e_log_psi_;
        out.log_k += e_log_psi_ * std::log(to_long_double(lam));
      } else if (mu > 0) {
        out.rho_unbounded = true;  // log Psi ~ mu log log log t
      } else {
        if (asym->log_k <= 1e-15L) {
          out.reason = "constant Psi <= 1: log Psi is not positive";
          return out;
        }
        out.log_k += e_log_psi_ * std::log(asym->log_k);
      }
    }
    out.rate = r;
    return out;
  }

 private:
  SeriesKind kind_;
  const AuxFunction& aux_;
  const DimensionFunction* f_;
  int e_log_t_ = 0, e_log_psi_ = 0;
};

// Integral of e^{(1-a)x} x^-b (log x)^-c over [X, oo), a > 1, X > 1.
inline long double exp_tail_integral(long double a, long double b, long double c, long double X) {
  long double lead = std::exp((1 - a) * X - b * std::log(X) - (c != 0 ? c * std::log(std::log(X)) : 0.0L));
  auto shape = [&](long double w) -> long double {
    long double x = X + w;
    long double v = (1 - a) * w - b * std::log1p(w / X);
    if (c != 0) v -= c * std::log(std::log(x) / std::log(X));
    return std::exp(v);
  };
  boost::math::quadrature::exp_sinh<long double> integrator;
  long double error = 0;
  long double I = integrator.integrate(shape, 0.0L, std::numeric_limits<long double>::infinity(),
                                        std::sqrt(std::numeric_limits<long double>::epsilon()), &error);
  return lead * I;
}

// Integral over [T, oo) of t^-alpha (log t)^-beta (log log t)^-gamma, for a summable rate and T >= 16.
inline long double comparison_integral(const Rate& r, long double T) {
  long double a = to_long_double(r.alpha), b = to_long_double(r.beta), c = to_long_double(r.gamma);
  long double U = std::log(T);
  if (r.alpha > 1) return exp_tail_integral(a, b, c, U);
  if (r.beta > 1) return exp_tail_integral(b, c, 0, std::log(U));
  return std::pow(std::log(U), 1 - c) / (c - 1);
}

inline long double comparison_log(const Rate& r, long double L) {
  long double v = -to_long_double(r.alpha) * L;
  if (r.beta != 0) v -= to_long_double(r.beta) * std::log(L);
  if (r.gamma != 0) v -= to_long_double(r.gamma) * std::log(std::log(L));
  return v;
}

// Sum over [t_start, T] in fixed blocks; each block is independent, blocks combine in order.
inline void partial_sums(const Summand& s, std::uint64_t t_start, std::uint64_t T, const SeriesOptions& opt,
                         SeriesVerdict& out) {
  out.blocks.clear();
  if (T < t_start) return;
  std::uint64_t bs = std::max<std::uint64_t>(1, opt.block_size);
  std::uint64_t count = (T - t_start) / bs + 1;
  struct Block {
    long double mid = 0, lo = 0, hi = 0;
  };
  std::vector<Block> blocks(count);
  const long double eps = std::numeric_limits<long double>::epsilon();
  parallel_for(count, opt.threads, [&](std::size_t i) {
    std::uint64_t a = t_start + i * bs, b = std::min(T, a + bs - 1);
    Block blk;
    for (std::uint64_t t = a; t <= b; ++t) {
      Term term = s.at(std::log(static_cast<long double>(t)));
      if (term.sign == 0) continue;
      long double v = term.sign * std::exp(term.log_abs);
      long double err = std::fabs(v) * 32 * eps * (4 + term.magnitude);
      blk.mid += v;
      blk.lo = add_down(blk.lo, std::nextafter(v - err, -std::numeric_limits<long double>::infinity()));
      blk.hi = add_up(blk.hi, std::nextafter(v + err, std::numeric_limits<long double>::infinity()));
    }
    blocks[i] = blk;
  });
  long double mid = 0, lo = 0, hi = 0;
  for (std::size_t i = 0; i < count; ++i) {
    mid += blocks[i].mid;
    lo = add_down(lo, blocks[i].lo);
    hi = add_up(hi, blocks[i].hi);
    out.blocks.push_back({std::min(T, t_start + (i + 1) * bs - 1), mid, lo, hi});
  }
  out.partial_sum = mid;
  out.partial_lower = lo;
  out.partial_upper = hi;
}

inline SeriesVerdict run_series(SeriesKind kind, const AuxFunction& aux, const DimensionFunction* f,
                                std::uint64_t T, const SeriesOptions& opt) {
  SeriesVerdict out;
  out.kind = kind;
  out.cutoff = T;
  Rational t0 = aux.t0();
  out.t_start = std::max<std::uint64_t>(1, ceil_of(t0).get_ui());
  require(T >= out.t_start, ErrorKind::InvalidArgument, "cutoff below the domain start of Psi");
  Summand s(kind, aux, f);
  partial_sums(s, out.t_start, T, opt, out);

  if (kind == SeriesKind::Simmons) out.notes.push_back("simmons kind: unproven refinement, reported for experiment only");
  {
    std::vector<Integer> grid;
    for (std::uint64_t t = out.t_start; t <= T; t = t * 2 + 1) grid.emplace_back(static_cast<unsigned long>(t));
    if (!aux.non_decreasing_on(grid)) out.notes.push_back("Psi is not non-decreasing on the sampled grid");
  }

  auto lead = s.leading();
  if (!lead.rate) {
    out.notes.push_back(lead.reason);
    out.total_lower = out.partial_lower;
    return out;
  }
  out.rate = lead.rate;
  bool summable = lead.rate->summable();
  if (summable && lead.rho_unbounded) {
    out.notes.push_back("growing log-log-log factor in a summable rate; no envelope");
    out.rate.reset();
    return out;
  }

  long double U = std::log(static_cast<long double>(T));
  if (T < 16) {
    out.notes.push_back("cutoff below 16: log log terms excluded from envelope reasoning");
    return out;
  }

  // rho = term / (K g) on a geometric grid of log t from log T outward
  std::vector<long double> rho;
  for (long double u = U; u < 1e5L; u *= 1.25L) {
    Term term = s.at(u);
    if (term.sign <= 0) {
      out.notes.push_back("summand not positive beyond the cutoff");
      return out;
    }
    rho.push_back(std::exp(term.log_abs - comparison_log(*lead.rate, u) - lead.log_k));
  }
  bool up = true, down = true;
  for (std::size_t i = 1; i < rho.size(); ++i) {
    up = up && rho[i] >= rho[i - 1] * (1 - 1e-15L);
    down = down && rho[i] <= rho[i - 1] * (1 + 1e-15L);
  }
  out.ratio_monotone = up || down;
  out.ratio_min = *std::min_element(rho.begin(), rho.end());
  out.ratio_max = *std::max_element(rho.begin(), rho.end());
  if (!lead.rho_unbounded) {
    out.ratio_min = std::min(out.ratio_min, 1.0L);
    out.ratio_max = std::max(out.ratio_max, 1.0L);
  }
  if (!out.ratio_monotone) {
    out.ratio_min *= 0.5L;
    out.ratio_max *= 2;
    out.notes.push_back("ratio samples not monotone; envelope widened by a factor 2");
  }
  const Rate& r = *lead.rate;
  bool power_type = r.beta == 0 && r.gamma == 0;
  long double K = std::exp(lead.log_k);

  if (summable) {
    // g must be decreasing on [T, oo) for the integral test
    long double slope = -to_long_double(r.alpha) + std::max(0.0L, -to_long_double(r.beta) / U) +
                        std::max(0.0L, -to_long_double(r.gamma) / (U * std::log(U)));
    if (slope >= 0) {
      out.notes.push_back("comparison function not yet decreasing at the cutoff; raise T");
      return out;
    }
    long double upper_int = comparison_integral(r, static_cast<long double>(T));
    long double lower_int = comparison_integral(r, static_cast<long double>(T) + 1);
    out.tail_upper = out.ratio_max * K * upper_int * (1 + 1e-6L);
    out.tail_lower = out.ratio_min * K * lower_int * (1 - 1e-6L);
    out.total_lower = add_down(out.partial_lower, out.tail_lower);
    out.total_upper = add_up(out.partial_upper, out.tail_upper);
    out.verdict = Convergence::Converges;
  } else {
    if (!(out.ratio_min > 0)) {
      out.notes.push_back("no positive lower ratio bound");
      return out;
    }
    out.tail_lower = std::numeric_limits<long double>::infinity();
    out.tail_upper = std::numeric_limits<long double>::infinity();
    out.total_lower = out.tail_lower;
    out.total_upper = out.tail_upper;
    out.divergence_rate = r.divergence_rate();
    out.verdict = Convergence::Diverges;
  }
  out.justification = power_type ? "p-series comparison" : "integral test on declared monotone envelope";
  return out;
}

}  // namespace detail

inline SeriesVerdict hausdorff_series(const DimensionFunction& f, const AuxFunction& aux, std::uint64_t T,
                                      const SeriesOptions& opt = {}) {
  return detail::run_series(SeriesKind::Hausdorff, aux, &f, T, opt);
}

inline SeriesVerdict kw_series(const AuxFunction& aux, std::uint64_t T, const SeriesOptions& opt = {}) {
  return detail::run_series(SeriesKind::KW, aux, nullptr, T, opt);
}

inline SeriesVerdict example_series(SeriesKind kind, const AuxFunction& aux, std::uint64_t T,
                                    const SeriesOptions& opt = {}) {
  require(kind != SeriesKind::Hausdorff, ErrorKind::InvalidArgument, "hausdorff series needs a dimension function");
  return detail::run_series(kind, aux, nullptr, T, opt);
}

}  // namespace dirichlet_lab::criteria
