#pragma once

// Coprime pairs, pair sums sum_q sum_{p<=q} f(1/(p q Psi(q))), the block
// inequality behind the comparison with sum_q q f(1/(q^2 Psi(q))), and the
// direct cover sum over words.

#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "dirichlet_lab/core/directed_sum.hpp"
#include "dirichlet_lab/core/parallel.hpp"
#include "dirichlet_lab/criteria/sublinear.hpp"

namespace dirichlet_lab::covers {

using criteria::DimensionFunction;
using sets::AuxFunction;

struct CoprimePair {
  std::uint64_t p = 0, q = 0;
  bool operator==(const CoprimePair&) const = default;
};

// Smallest q with q^2 >= 2^(N-1).
inline std::uint64_t pair_q_min(unsigned N) {
  require(N >= 1 && N <= 120, ErrorKind::InvalidArgument, "N must be in [1, 120]");
  Integer bound = pow_integer(Integer(2), N - 1);
  Integer r = isqrt(bound);
  if (r * r < bound) r += 1;
  require(mpz_fits_ulong_p(r.get_mpz_t()), ErrorKind::InvalidArgument, "q_min does not fit 64 bits");
  return std::max<std::uint64_t>(1, r.get_ui());
}

// Calls fn(pair) for gcd(p,q)=1, 1 <= p <= q <= q_max, q^2 >= 2^(N-1); q then p ascending.
template <class Fn>
void for_each_pair(unsigned N, std::uint64_t q_max, Fn fn) {
  for (std::uint64_t q = pair_q_min(N); q <= q_max; ++q)
    for (std::uint64_t p = 1; p <= q; ++p)
      if (std::gcd(p, q) == 1) fn(CoprimePair{p, q});
}

inline std::vector<CoprimePair> enumerate_pairs(unsigned N, std::uint64_t q_max) {
  std::vector<CoprimePair> out;
  for_each_pair(N, q_max, [&](CoprimePair c) { out.push_back(c); });
  return out;
}

namespace detail {

inline long double log_psi(const AuxFunction& aux, std::uint64_t q) {
  long double lp = aux.log_value(std::log(static_cast<long double>(q)));
  require(std::isfinite(lp), ErrorKind::DomainViolation, "Psi(" + std::to_string(q) + ") <= 0");
  return lp;
}

// f(exp(log_r)) with its log-space error bound
inline void add_f(DirectedSum& s, const DimensionFunction& f, long double log_r) {
  long double lf = f.log_value(log_r);
  s.add(std::exp(lf), DirectedSum::log_space_error(std::fabs(lf) + std::fabs(log_r)));
}

inline std::optional<Rational> power_exponent(const DimensionFunction& f) {
  if (const auto* p = std::get_if<criteria::PowerLaw>(&f.family())) return p->s;
  return std::nullopt;
}

}  // namespace detail

struct PairRow {
  std::uint64_t q = 0;
  DirectedSum inner;       // sum_{p<=q} f(1/(p q Psi(q)))
  DirectedSum comparison;  // q f(1/(q^2 Psi(q)))
  long double kappa = 0;   // inner / comparison
};

struct PairSum {
  DirectedSum total, comparison_total;
  std::vector<PairRow> rows;
};

// Inner sums for q in [q_lo, q_hi]. Power laws use the factorization
// (q Psi)^-s sum_p p^-s with an incremental prefix sum; other f sum directly.
inline std::vector<PairRow> pair_rows(const DimensionFunction& f, const AuxFunction& aux, std::uint64_t q_lo,
                                      std::uint64_t q_hi) {
  std::vector<PairRow> rows;
  if (q_hi < q_lo) return rows;
  require(q_lo >= 1, ErrorKind::InvalidArgument, "q starts at 1");
  require(Rational(Integer(static_cast<unsigned long>(q_lo))) >= aux.t0(), ErrorKind::DomainViolation,
          "q below t0 of Psi");
  auto s = detail::power_exponent(f);
  DirectedSum prefix;  // sum_{p<=q} p^-s
  long double sd = s ? to_long_double(*s) : 0;
  if (s) {
    for (std::uint64_t p = 1; p < q_lo; ++p) {
      long double lp = -sd * std::log(static_cast<long double>(p));
      prefix.add(std::exp(lp), DirectedSum::log_space_error(std::fabs(lp)));
    }
  } else {
    require(q_hi <= 5000, ErrorKind::BudgetExceeded, "direct pair sums are limited to q <= 5000 for non-power f");
  }
  for (std::uint64_t q = q_lo; q <= q_hi; ++q) {
    PairRow row;
    row.q = q;
    long double lq = std::log(static_cast<long double>(q));
    long double lp = detail::log_psi(aux, q);
    if (s) {
      long double l = -sd * lq;
      prefix.add(std::exp(l), DirectedSum::log_space_error(std::fabs(l)));
      long double scale_log = -sd * (lq + lp);
      long double scale = std::exp(scale_log);
      long double e = DirectedSum::log_space_error(std::fabs(scale_log));
      row.inner.value = prefix.value * scale;
      row.inner.lower = std::nextafter(prefix.lower * scale * (1 - e), -DirectedSum::inf);
      row.inner.upper = std::nextafter(prefix.upper * scale * (1 + e), DirectedSum::inf);
    } else {
      for (std::uint64_t p = 1; p <= q; ++p)
        detail::add_f(row.inner, f, -(std::log(static_cast<long double>(p)) + lq + lp));
    }
    long double lc = lq + f.log_value(-(2 * lq + lp));
    row.comparison.add(std::exp(lc), DirectedSum::log_space_error(std::fabs(lc) + 3 * lq + std::fabs(lp)));
    row.kappa = row.inner.value / row.comparison.value;
    rows.push_back(row);
  }
  return rows;
}

inline PairSum pair_sum(const DimensionFunction& f, const AuxFunction& aux, std::uint64_t q_max) {
  PairSum out;
  if (q_max == 0) return out;
  std::uint64_t q_lo = std::max<std::uint64_t>(1, ceil_of(aux.t0()).get_ui());
  out.rows = pair_rows(f, aux, q_lo, q_max);
  for (const auto& r : out.rows) {
    out.total.add(r.inner);
    out.comparison_total.add(r.comparison);
  }
  return out;
}

// Blocks C_k = B^-k q f(B^k/(q^2 Psi(q))), k = 1..t with B^(t-1) <= q < B^t.
struct BlockCheck {
  std::uint64_t q = 0;
  unsigned t = 0;
  std::vector<long double> blocks;
  long double max_decay = 0;  // max_k C_{k+1}/C_k
  long double kappa = 0;
  long double kappa_bound = 0;  // c b with c = 1/(1 - b/B)
  bool decay_ok = false, kappa_ok = false, inner_ok = false;
};

inline std::uint64_t block_q0(const criteria::SublinearityCertificate& cert) {
  return std::max<std::uint64_t>(static_cast<std::uint64_t>(std::ceil(1 / cert.x0)),
                                 static_cast<std::uint64_t>(std::ceil(cert.B))) +
         1;
}

namespace detail {

inline BlockCheck check_blocks(const DimensionFunction& f, const criteria::SublinearityCertificate& cert,
                               const PairRow& row, long double lp) {
  BlockCheck out;
  out.q = row.q;
  long double B = cert.B, lq = std::log(static_cast<long double>(row.q)), lB = std::log(B);
  // B^(t-1) <= q < B^t
  out.t = 1;
  for (long double power = B; power <= static_cast<long double>(row.q); power *= B) ++out.t;
  long double log_r = -(2 * lq + lp);
  for (unsigned k = 1; k <= out.t; ++k)
    out.blocks.push_back(std::exp(-(k * lB) + lq + f.log_value(k * lB + log_r)));
  long double decay_limit = cert.b / B * (1 + 1e-12L);
  out.decay_ok = true;
  for (std::size_t k = 0; k + 1 < out.blocks.size(); ++k) {
    long double ratio = out.blocks[k + 1] / out.blocks[k];
    out.max_decay = std::max(out.max_decay, ratio);
    out.decay_ok = out.decay_ok && ratio <= decay_limit;
  }
  long double c = 1 / (1 - cert.b / B);
  out.kappa = row.kappa;
  out.kappa_bound = c * cert.b;
  out.kappa_ok = row.inner.upper <= out.kappa_bound * row.comparison.lower * (1 + 1e-12L);
  long double block_total = 0;
  for (long double cb : out.blocks) block_total += cb;
  out.inner_ok = row.inner.upper <= B * block_total * (1 + 1e-12L);
  return out;
}

}  // namespace detail

inline BlockCheck block_bound_check(const DimensionFunction& f, const criteria::SublinearityCertificate& cert,
                                    const AuxFunction& aux, std::uint64_t q) {
  require(cert.essentially_sublinear, ErrorKind::NotApplicable, "block check needs a sub-linearity certificate");
  require(q >= block_q0(cert), ErrorKind::InvalidArgument, "q below q0 = " + std::to_string(block_q0(cert)));
  auto rows = pair_rows(f, aux, q, q);
  return detail::check_blocks(f, cert, rows.front(), detail::log_psi(aux, q));
}

struct BlockSweep {
  std::uint64_t q0 = 0, q_max = 0;
  std::size_t checked = 0;
  std::vector<std::uint64_t> decay_violations, kappa_violations, inner_violations;
  long double max_decay_ratio = 0, max_kappa = 0, kappa_bound = 0, decay_bound = 0;
  std::vector<BlockCheck> samples;  // checks at q0 and powers of ten
};

// Every q in [q0, q_max]; ranges are split into fixed chunks for threads.
inline BlockSweep block_sweep(const DimensionFunction& f, const criteria::SublinearityCertificate& cert,
                              const AuxFunction& aux, std::uint64_t q_max, unsigned threads = 1) {
  require(cert.essentially_sublinear, ErrorKind::NotApplicable, "block check needs a sub-linearity certificate");
  BlockSweep out;
  out.q0 = std::max<std::uint64_t>(block_q0(cert), ceil_of(aux.t0()).get_ui());
  out.q_max = q_max;
  out.decay_bound = cert.b / cert.B;
  out.kappa_bound = cert.b / (1 - cert.b / cert.B);
  if (q_max < out.q0) return out;
  const std::uint64_t chunk = 8192;
  std::size_t count = (q_max - out.q0) / chunk + 1;
  std::vector<std::vector<BlockCheck>> results(count);
  parallel_for(count, threads, [&](std::size_t i) {
    std::uint64_t a = out.q0 + i * chunk, b = std::min(q_max, a + chunk - 1);
    for (const auto& row : pair_rows(f, aux, a, b))
      results[i].push_back(detail::check_blocks(f, cert, row, detail::log_psi(aux, row.q)));
  });
  std::uint64_t next_sample = 10;
  for (const auto& part : results) {
    for (const auto& c : part) {
      ++out.checked;
      if (!c.decay_ok) out.decay_violations.push_back(c.q);
      if (!c.kappa_ok) out.kappa_violations.push_back(c.q);
      if (!c.inner_ok) out.inner_violations.push_back(c.q);
      out.max_decay_ratio = std::max(out.max_decay_ratio, c.max_decay);
      out.max_kappa = std::max(out.max_kappa, c.kappa);
      if (c.q == out.q0 || c.q == next_sample || c.q == q_max) out.samples.push_back(c);
      while (next_sample <= c.q) next_sample *= 10;
    }
  }
  return out;
}

struct CoverSum {
  unsigned n_min = 0, n_max = 0;
  std::uint64_t digit_cap = 0, words = 0, distinct_pairs = 0;
  unsigned max_multiplicity = 0;
  DirectedSum direct;      // sum over words of f(1/(Psi(q_n) q_{n-1} q_n))
  DirectedSum restricted;  // sum over distinct reached pairs of f(1/(p q Psi(q)))
  bool holds = false;      // direct <= 2 restricted
  std::vector<DirectedSum> by_length;
};

// Words of length n_min..n_max with digits <= digit_cap. Every word term
// equals its pair's term, so direct - 2 restricted = sum (mult - 2) term and
// the comparison is decided exactly by the multiplicities.
inline CoverSum cover_sum_direct(const DimensionFunction& f, const AuxFunction& aux, unsigned n_max,
                                 std::uint64_t digit_cap, std::optional<unsigned> n_min = std::nullopt,
                                 std::uint64_t budget = 20000000) {
  CoverSum out;
  out.n_max = n_max;
  out.n_min = n_min.value_or(n_max);
  out.digit_cap = digit_cap;
  require(n_max >= 1 && out.n_min >= 1 && out.n_min <= n_max, ErrorKind::InvalidArgument, "need 1 <= n_min <= n_max");
  require(digit_cap >= 1, ErrorKind::InvalidArgument, "digit cap must be >= 1");
  long double words = 0;
  for (unsigned n = out.n_min; n <= n_max; ++n) words += std::pow(static_cast<long double>(digit_cap), n);
  if (words > static_cast<long double>(budget))
    fail(ErrorKind::BudgetExceeded, "cover enumeration needs " + std::to_string(static_cast<double>(words)) +
                                        " words, budget " + std::to_string(budget));
  require(std::log2(static_cast<long double>(digit_cap + 1)) * n_max < 62, ErrorKind::BudgetExceeded,
          "denominators exceed 64 bits");

  std::map<std::pair<std::uint64_t, std::uint64_t>, unsigned> multiplicity;
  out.by_length.assign(n_max + 1, DirectedSum{});
  auto term = [&](std::uint64_t qm, std::uint64_t qn) {
    long double log_r = -(detail::log_psi(aux, qn) + std::log(static_cast<long double>(qm)) +
                          std::log(static_cast<long double>(qn)));
    return log_r;
  };
  // depth-first over words, carrying (q_{n-1}, q_n)
  struct Frame {
    std::uint64_t qm, qn;
    unsigned n;
  };
  std::vector<Frame> stack;
  for (std::uint64_t a = 1; a <= digit_cap; ++a) stack.push_back({1, a, 1});
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    if (fr.n >= out.n_min) {
      require(aux.in_domain(Integer(static_cast<unsigned long>(fr.qn))), ErrorKind::DomainViolation,
              "q_n below t0 of Psi");
      ++out.words;
      detail::add_f(out.direct, f, term(fr.qm, fr.qn));
      detail::add_f(out.by_length[fr.n], f, term(fr.qm, fr.qn));
      ++multiplicity[{fr.qm, fr.qn}];
    }
    if (fr.n < n_max)
      for (std::uint64_t a = digit_cap; a >= 1; --a) stack.push_back({fr.qn, a * fr.qn + fr.qm, fr.n + 1});
  }
  for (const auto& [pair, mult] : multiplicity) {
    ++out.distinct_pairs;
    out.max_multiplicity = std::max(out.max_multiplicity, mult);
    detail::add_f(out.restricted, f, term(pair.first, pair.second));
  }
  out.holds = out.max_multiplicity <= 2;
  return out;
}

}  // namespace dirichlet_lab::covers
