#pragma once

#include <optional>
#include <utility>

#include "dirichlet_lab/cf/real_input.hpp"

namespace dirichlet_lab::cf {

enum class ExpansionStatus {
  Exact,               // rational expansion terminated (canonical form)
  ExactPeriodic,       // periodic word unrolled to the requested depth
  DepthReached,        // exact digits, expansion continues past the depth
  PrecisionExhausted,  // interval input: certified prefix only
  DefinedAsZeroExpansion,
};

constexpr const char* to_string(ExpansionStatus s) {
  switch (s) {
    case ExpansionStatus::Exact: return "Exact";
    case ExpansionStatus::ExactPeriodic: return "ExactPeriodic";
    case ExpansionStatus::DepthReached: return "DepthReached";
    case ExpansionStatus::PrecisionExhausted: return "PrecisionExhausted";
    case ExpansionStatus::DefinedAsZeroExpansion: return "DefinedAsZeroExpansion";
  }
  return "Unknown";
}

struct Expansion {
  Word word;
  ExpansionStatus status;
  std::size_t certified = 0;  // number of certified digits (== word.size())
};

// One step of the Gauss map on an interval: digit a and the enclosure of T(x),
// or nullopt when [1/hi, 1/lo] straddles an integer breakpoint.
inline std::optional<std::pair<Integer, ValidatedInterval>> gauss_step_interval(const Rational& lo, const Rational& hi) {
  if (lo <= 0) return std::nullopt;
  Rational inv_hi = 1 / hi, inv_lo = 1 / lo;
  Integer a = floor_of(inv_hi);
  if (floor_of(inv_lo) != a) return std::nullopt;
  return std::make_pair(a, ValidatedInterval(inv_hi - Rational(a), inv_lo - Rational(a)));
}

// a_1(x) and T(x) = 1/x mod 1.
inline std::pair<Integer, RealInput> gauss_step(const RealInput& x) {
  if (const auto* r = std::get_if<ExactRational>(&x)) {
    require(r->value != 0, ErrorKind::DomainViolation, "gauss_step at x = 0 (T(0) = 0, no digit)");
    Rational inv = 1 / r->value;
    Integer a = floor_of(inv);
    return {a, ExactRational(inv - Rational(a))};
  }
  if (const auto* w = std::get_if<PeriodicWord>(&x)) {
    if (!w->preperiod.empty()) return {w->preperiod[0], PeriodicWord(w->preperiod.suffix_from(1), w->period)};
    Word rotated = w->period.suffix_from(1);
    rotated.push_back(w->period[0]);
    return {w->period[0], PeriodicWord(Word(), rotated)};
  }
  const auto& v = std::get<ValidatedInterval>(x);
  auto step = gauss_step_interval(v.lo, v.hi);
  if (!step) fail(ErrorKind::PrecisionExhausted, "interval straddles a Gauss-map breakpoint");
  return {step->first, step->second};
}

inline Expansion continued_fraction(const RealInput& x, std::size_t depth) {
  require(depth >= 1, ErrorKind::InvalidArgument, "depth must be >= 1");
  Expansion out{Word(), ExpansionStatus::DepthReached, 0};
  if (const auto* r = std::get_if<ExactRational>(&x)) {
    if (r->value == 0) return {Word(), ExpansionStatus::DefinedAsZeroExpansion, 0};
    Integer num = r->value.get_num(), den = r->value.get_den();
    while (num != 0 && out.word.size() < depth) {
      Integer a = den / num;  // both positive, truncation == floor
      Integer rem = den - a * num;
      out.word.push_back(a);
      den = num;
      num = rem;
    }
    out.status = num == 0 ? ExpansionStatus::Exact : ExpansionStatus::DepthReached;
  } else if (const auto* w = std::get_if<PeriodicWord>(&x)) {
    for (std::size_t k = 0; k < depth; ++k) {
      out.word.push_back(k < w->preperiod.size() ? w->preperiod[k]
                                                 : w->period[(k - w->preperiod.size()) % w->period.size()]);
    }
    out.status = ExpansionStatus::ExactPeriodic;
  } else {
    const auto& v = std::get<ValidatedInterval>(x);
    if (v.lo == 0 && v.hi == 0) return {Word(), ExpansionStatus::DefinedAsZeroExpansion, 0};
    Rational lo = v.lo, hi = v.hi;
    while (out.word.size() < depth) {
      if (lo == hi && lo == 0) {
        out.status = ExpansionStatus::Exact;
        break;
      }
      auto step = gauss_step_interval(lo, hi);
      if (!step) {
        out.status = ExpansionStatus::PrecisionExhausted;
        break;
      }
      out.word.push_back(step->first);
      lo = step->second.lo;
      hi = step->second.hi;
    }
  }
  out.certified = out.word.size();
  return out;
}

}  // namespace dirichlet_lab::cf
