#pragma once

// Routes (Psi, f) to the matching dichotomy: f = r goes to the Lebesgue law
// through the kw series; certified sub-linear f goes to the Hausdorff law;
// anything else is OutOfTheorem, with the two-sided bounding series
// attached for f = x log(1/x).

#include <optional>
#include <string>
#include <vector>

#include "dirichlet_lab/criteria/series.hpp"
#include "dirichlet_lab/criteria/sublinear.hpp"
#include "dirichlet_lab/criteria/tau.hpp"

namespace dirichlet_lab::criteria {

enum class Classification { HfZero, HfInfinity, LebesgueZero, LebesgueFull, OutOfTheorem };

inline std::string to_string(Classification c) {
  switch (c) {
    case Classification::HfZero: return "H^f_zero";
    case Classification::HfInfinity: return "H^f_infinity";
    case Classification::LebesgueZero: return "Lebesgue_zero";
    case Classification::LebesgueFull: return "Lebesgue_full";
    case Classification::OutOfTheorem: return "OutOfTheorem";
  }
  return "?";
}

struct ClassifyResult {
  Classification classification = Classification::OutOfTheorem;
  std::optional<SeriesVerdict> series;
  std::optional<SublinearityCertificate> certificate;
  std::optional<SublinearConsequences> consequences;
  std::optional<SeriesVerdict> upper_bound_series, lower_bound_series;  // f = x log(1/x)
  std::optional<long double> dimension;                                  // 2/(2+tau) from declared tau
  std::vector<std::string> diagnostics;
};

inline ClassifyResult classify(const AuxFunction& aux, const DimensionFunction& f, std::uint64_t T,
                               const SeriesOptions& opt = {}) {
  ClassifyResult out;
  if (auto a = aux.asymptotics()) out.dimension = dimension_of_complement(to_long_double(a->tau));

  if (f.is_power(Rational(1))) {
    out.series = kw_series(aux, T, opt);
    switch (out.series->verdict) {
      case Convergence::Converges: out.classification = Classification::LebesgueZero; break;
      case Convergence::Diverges: out.classification = Classification::LebesgueFull; break;
      case Convergence::Undecided:
        out.diagnostics.push_back("kw series undecided");
        for (const auto& n : out.series->notes) out.diagnostics.push_back(n);
        break;
    }
    return out;
  }

  out.certificate = certify_sublinear(f);
  if (out.certificate->essentially_sublinear) {
    out.consequences = sublinear_consequences(f, *out.certificate);
    if (!out.consequences->certificate_valid) {
      out.diagnostics.push_back("certificate invalidated by its consequence checks");
      for (const auto& v : out.consequences->violations) out.diagnostics.push_back(v);
      return out;
    }
    out.series = hausdorff_series(f, aux, T, opt);
    switch (out.series->verdict) {
      case Convergence::Converges: out.classification = Classification::HfZero; break;
      case Convergence::Diverges: out.classification = Classification::HfInfinity; break;
      case Convergence::Undecided:
        out.diagnostics.push_back("hausdorff series undecided");
        for (const auto& n : out.series->notes) out.diagnostics.push_back(n);
        break;
    }
    return out;
  }

  out.diagnostics.push_back("f is not certified essentially sub-linear: " + out.certificate->reason);
  if (f.is_xlogx()) {
    out.upper_bound_series = example_series(SeriesKind::XLogXUpper, aux, T, opt);
    out.lower_bound_series = example_series(SeriesKind::XLogXLower, aux, T, opt);
    out.diagnostics.push_back("two-sided bounds only: H^f = 0 if the xlogx-upper series converges, "
                              "H^f = oo if the xlogx-lower series diverges");
  }
  return out;
}

inline ClassifyResult classify(const sets::ApproxFunction& psi, const DimensionFunction& f, std::uint64_t T,
                               const SeriesOptions& opt = {}) {
  ClassifyResult out = classify(AuxFunction::derived(psi), f, T, opt);
  std::vector<Integer> grid;
  for (Integer t = ceil_of(psi.t0()); t <= Integer(static_cast<unsigned long>(T)); t = 2 * t + 1) grid.push_back(t);
  if (!psi.non_increasing_on(grid)) out.diagnostics.push_back("psi is not non-increasing on the sampled grid");
  return out;
}

}  // namespace dirichlet_lab::criteria
