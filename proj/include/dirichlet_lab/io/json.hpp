#pragma once

// JSON views of the library's result types. Keys keep insertion order so
// reports are byte-stable.

#include <json.hpp>

#include "dirichlet_lab/cf/cylinder.hpp"
#include "dirichlet_lab/cf/expansion.hpp"
#include "dirichlet_lab/covers/fiber.hpp"
#include "dirichlet_lab/covers/jset.hpp"
#include "dirichlet_lab/covers/pairs.hpp"
#include "dirichlet_lab/criteria/classify.hpp"
#include "dirichlet_lab/criteria/tau.hpp"
#include "dirichlet_lab/io/decimal.hpp"
#include "dirichlet_lab/sets/audits.hpp"

namespace dirichlet_lab::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& z) { return z.get_str(); }
inline Json to_json(const Rational& r) { return r.get_str(); }

inline Json to_json(const Interval& x) {
  return {{"lo", decimal_directed(x.lo(), false)}, {"hi", decimal_directed(x.hi(), true)}};
}

inline Json to_json(const DirectedSum& s) {
  return {{"value", decimal(s.value)}, {"lower", decimal(s.lower)}, {"upper", decimal(s.upper)}};
}

inline Json to_json(const cf::Word& w) {
  Json a = Json::array();
  for (const auto& d : w) a.push_back(d.get_str());
  return a;
}

inline Json to_json(long double v);
inline Json to_json(double v);
inline Json to_json(const criteria::Rate& r);
inline Json to_json(const criteria::SeriesVerdict& v);
inline Json to_json(const criteria::SublinearityCertificate& c);
inline Json to_json(const criteria::SublinearConsequences& c);

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? to_json(*v) : Json(nullptr);
}

inline Json to_json(long double v) { return decimal(v); }
inline Json to_json(double v) { return decimal(static_cast<long double>(v)); }

inline Json to_json(const cf::Cylinder& c) {
  return {{"word", to_json(c.word)},         {"left", to_json(c.left)},
          {"right", to_json(c.right)},       {"left_closed", c.left_closed},
          {"right_closed", c.right_closed},  {"length", to_json(c.length())}};
}

inline Json convergent_rows(const cf::Word& w) {
  cf::ConvergentTable t(w);
  Json rows = Json::array();
  for (long k = -1; k <= static_cast<long>(w.size()); ++k) {
    rows.push_back({{"n", k},
                    {"a", k >= 1 ? Json(w.digit(static_cast<std::size_t>(k)).get_str()) : Json(nullptr)},
                    {"p", t.p(k).get_str()},
                    {"q", t.q(k).get_str()}});
  }
  return rows;
}

inline Json to_json(const sets::Horizon& h) {
  return {{"start", h.start}, {"end", h.end}, {"precision_bits", h.precision_bits},
          {"max_precision_bits", h.max_precision_bits}};
}

inline Json to_json(const sets::MembershipReport& r) {
  Json events = Json::array();
  for (auto e : r.events) events.push_back(sets::to_string(e));
  return {{"set", sets::to_string(r.set)},
          {"horizon", to_json(r.horizon)},
          {"verdict", sets::to_string(r.verdict)},
          {"failing_index", r.failing_index ? Json(*r.failing_index) : Json(nullptr)},
          {"witnesses", r.witnesses},
          {"events", events},
          {"note", r.note}};
}

inline Json to_json(const sets::ImplicationCheck& c) {
  return {{"name", c.name},
          {"fired", c.fired},
          {"confirmed", c.confirmed},
          {"undecided", c.undecided},
          {"violations", c.violations}};
}

inline Json to_json(const sets::AuditReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"kind", r.kind}, {"horizon", to_json(r.horizon)}, {"violations", r.violations()}, {"checks", checks}};
}

inline Json to_json(const sets::EquivalenceReport& r) {
  return {{"compared", r.compared},
          {"mismatches", r.mismatches},
          {"dirichlet", to_json(r.dirichlet)},
          {"product", to_json(r.product)}};
}

inline Json to_json(const criteria::Rate& r) {
  return {{"alpha", to_json(r.alpha)}, {"beta", to_json(r.beta)}, {"gamma", to_json(r.gamma)},
          {"comparison", r.describe()}, {"summable", r.summable()}};
}

inline Json to_json(const criteria::SeriesVerdict& v) {
  Json blocks = Json::array();
  for (const auto& b : v.blocks)
    blocks.push_back({{"t_end", b.t_end}, {"partial", decimal(b.partial)}, {"lower", decimal(b.lower)},
                      {"upper", decimal(b.upper)}});
  return {{"kind", criteria::to_string(v.kind)},
          {"verdict", criteria::to_string(v.verdict)},
          {"t_start", v.t_start},
          {"cutoff", v.cutoff},
          {"partial_sum", decimal(v.partial_sum)},
          {"partial_lower", decimal(v.partial_lower)},
          {"partial_upper", decimal(v.partial_upper)},
          {"rate", optional_json(v.rate)},
          {"tail_lower", decimal(v.tail_lower)},
          {"tail_upper", decimal(v.tail_upper)},
          {"total_lower", decimal(v.total_lower)},
          {"total_upper", decimal(v.total_upper)},
          {"ratio_min", decimal(v.ratio_min)},
          {"ratio_max", decimal(v.ratio_max)},
          {"ratio_monotone", v.ratio_monotone},
          {"justification", v.justification},
          {"analytic_envelope", v.has_analytic_envelope()},
          {"divergence_rate", v.divergence_rate},
          {"blocks", blocks},
          {"notes", v.notes}};
}

inline Json to_json(const criteria::SublinearityCertificate& c) {
  return {{"essentially_sublinear", c.essentially_sublinear},
          {"B", decimal(c.B)},
          {"b", decimal(c.b)},
          {"x0", decimal(c.x0)},
          {"C", decimal(c.C)},
          {"sampled_max", decimal(c.sampled_max)},
          {"declared_limsup", optional_json(c.declared_limsup)},
          {"reason", c.reason}};
}

inline Json to_json(const criteria::SublinearConsequences& c) {
  return {{"applicable", c.applicable},
          {"unbounded_ratio", c.unbounded_ratio},
          {"quasi_monotone", c.quasi_monotone},
          {"measured_c", decimal(c.measured_c)},
          {"bound", decimal(c.bound)},
          {"certificate_valid", c.certificate_valid},
          {"violations", c.violations}};
}

inline Json to_json(const criteria::ClassifyResult& r) {
  return {{"classification", criteria::to_string(r.classification)},
          {"series", optional_json(r.series)},
          {"certificate", optional_json(r.certificate)},
          {"consequences", optional_json(r.consequences)},
          {"upper_bound_series", optional_json(r.upper_bound_series)},
          {"lower_bound_series", optional_json(r.lower_bound_series)},
          {"dimension", optional_json(r.dimension)},
          {"diagnostics", r.diagnostics}};
}

inline Json to_json(const criteria::TauEstimate& t) {
  Json grid = Json::array();
  for (std::size_t i = 0; i < t.grid.size(); ++i) grid.push_back({{"j", t.grid[i].j}, {"ratio", decimal(t.grid[i].ratio)}});
  Json mins = Json::array();
  for (auto m : t.tail_running_min) mins.push_back(decimal(m));
  return {{"tau_hat", decimal(t.tau_hat)},
          {"declared_tau", optional_json(t.declared_tau)},
          {"grid", grid},
          {"tail_running_min", mins}};
}

inline Json to_json(const criteria::CriticalExponent& c) {
  Json trace = Json::array();
  for (const auto& p : c.trace) trace.push_back({{"Q", p.Q}, {"s_star", optional_json(p.s_star)}});
  return {{"theta", decimal(static_cast<long double>(c.theta))},
          {"s_star", optional_json(c.s_star)},
          {"target", optional_json(c.target)},
          {"trace", trace},
          {"notes", c.notes}};
}

inline Json to_json(const covers::Fiber& f) {
  Json words = Json::array();
  for (const auto& w : f.words) words.push_back(to_json(w));
  return {{"p", to_json(f.p)}, {"q", to_json(f.q)}, {"size", f.words.size()},
          {"words", words},    {"verified", f.verified}, {"note", f.note}};
}

inline Json to_json(const covers::JSet& j) {
  return {{"word", to_json(j.base)},
          {"threshold", to_json(j.threshold)},
          {"first_digit", to_json(j.first_digit)},
          {"left", to_json(j.left)},
          {"right", to_json(j.right)},
          {"left_closed", j.left_closed},
          {"right_closed", j.right_closed},
          {"diameter", to_json(j.diameter)},
          {"diameter_bound", to_json(j.diameter_bound)},
          {"bound_holds", to_string(j.bound_holds)},
          {"full_subcylinder", j.full_subcylinder}};
}

inline Json to_json(const covers::PairRow& r) {
  return {{"q", r.q}, {"inner", to_json(r.inner)}, {"comparison", to_json(r.comparison)}, {"kappa", decimal(r.kappa)}};
}

inline Json to_json(const covers::PairSum& s) {
  Json rows = Json::array();
  for (const auto& r : s.rows) rows.push_back(to_json(r));
  return {{"total", to_json(s.total)}, {"comparison_total", to_json(s.comparison_total)}, {"rows", rows}};
}

inline Json to_json(const covers::BlockCheck& b) {
  Json blocks = Json::array();
  for (auto c : b.blocks) blocks.push_back(decimal(c));
  return {{"q", b.q},
          {"t", b.t},
          {"blocks", blocks},
          {"max_decay", decimal(b.max_decay)},
          {"kappa", decimal(b.kappa)},
          {"kappa_bound", decimal(b.kappa_bound)},
          {"decay_ok", b.decay_ok},
          {"kappa_ok", b.kappa_ok},
          {"inner_ok", b.inner_ok}};
}

inline Json to_json(const covers::BlockSweep& s) {
  Json samples = Json::array();
  for (const auto& b : s.samples) samples.push_back(to_json(b));
  return {{"q0", s.q0},
          {"q_max", s.q_max},
          {"checked", s.checked},
          {"decay_bound", decimal(s.decay_bound)},
          {"max_decay_ratio", decimal(s.max_decay_ratio)},
          {"kappa_bound", decimal(s.kappa_bound)},
          {"max_kappa", decimal(s.max_kappa)},
          {"decay_violations", s.decay_violations},
          {"kappa_violations", s.kappa_violations},
          {"inner_violations", s.inner_violations},
          {"samples", samples}};
}

inline Json to_json(const covers::CoverSum& c) {
  Json by_length = Json::array();
  for (unsigned n = c.n_min; n <= c.n_max && n < c.by_length.size(); ++n)
    by_length.push_back({{"n", n}, {"sum", to_json(c.by_length[n])}});
  return {{"n_min", c.n_min},
          {"n_max", c.n_max},
          {"digit_cap", c.digit_cap},
          {"words", c.words},
          {"distinct_pairs", c.distinct_pairs},
          {"max_multiplicity", c.max_multiplicity},
          {"direct", to_json(c.direct)},
          {"restricted", to_json(c.restricted)},
          {"holds", c.holds},
          {"by_length", by_length}};
}

}  // namespace dirichlet_lab::io
