#pragma once

// Finite-horizon event tables for D(psi), G(Psi), G1(Psi), K(Psi) and F(phi).
// Each index n gets True/False when decided, Undecided when the enclosures
// cannot separate the two sides even at the precision budget, Terminated past
// the end of a rational expansion and OutOfDomain when q_n < t0.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dirichlet_lab/cf/identities.hpp"
#include "dirichlet_lab/sets/functions.hpp"

namespace dirichlet_lab::sets {

enum class SetTag { D, Product, G, G1, K, F };

inline std::string to_string(SetTag s) {
  switch (s) {
    case SetTag::D: return "D";
    case SetTag::Product: return "D-product";
    case SetTag::G: return "G";
    case SetTag::G1: return "G1";
    case SetTag::K: return "K";
    case SetTag::F: return "F";
  }
  return "?";
}

enum class EventStatus { False, True, Undecided, Terminated, OutOfDomain };

inline std::string to_string(EventStatus e) {
  switch (e) {
    case EventStatus::False: return "false";
    case EventStatus::True: return "true";
    case EventStatus::Undecided: return "undecided";
    case EventStatus::Terminated: return "terminated";
    case EventStatus::OutOfDomain: return "out-of-domain";
  }
  return "?";
}

enum class Verdict { AllEventsHold, EventFailsAt, WitnessesFound, NoWitnessUpToHorizon, UndecidedAtPrecision };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::AllEventsHold: return "AllEventsHold";
    case Verdict::EventFailsAt: return "EventFailsAt";
    case Verdict::WitnessesFound: return "WitnessesFound";
    case Verdict::NoWitnessUpToHorizon: return "NoWitnessUpToHorizon";
    case Verdict::UndecidedAtPrecision: return "UndecidedAtPrecision";
  }
  return "?";
}

struct Horizon {
  std::size_t start = 1;
  std::size_t end = 50;
  unsigned precision_bits = kDefaultPrecisionBits;
  unsigned max_precision_bits = 4096;

  void validate() const {
    require(start >= 1 && start <= end, ErrorKind::InvalidArgument, "horizon needs 1 <= start <= end");
    require(precision_bits >= 16 && precision_bits <= max_precision_bits, ErrorKind::InvalidArgument,
            "precision budget must satisfy 16 <= bits <= max");
  }
  std::size_t size() const { return end - start + 1; }
};

struct MembershipReport {
  SetTag set = SetTag::D;
  Horizon horizon;
  std::vector<EventStatus> events;  // events[i] is the event at n = horizon.start + i
  std::vector<std::size_t> witnesses;
  Verdict verdict = Verdict::NoWitnessUpToHorizon;
  std::optional<std::size_t> failing_index;  // EventFailsAt(n)
  std::string note;

  EventStatus at(std::size_t n) const { return events.at(n - horizon.start); }
  std::size_t count(EventStatus s) const {
    std::size_t c = 0;
    for (auto e : events) c += e == s;
    return c;
  }
};

namespace detail {

// Evaluates a three-valued predicate, doubling the precision while undecided.
// PrecisionExhausted from an enclosure counts as undecided.
inline EventStatus decide(const Horizon& h, const std::function<Truth(unsigned)>& predicate) {
  for (unsigned bits = h.precision_bits; bits <= h.max_precision_bits; bits *= 2) {
    Truth t = Truth::Unknown;
    try {
      t = predicate(bits);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PrecisionExhausted) throw;
    }
    if (t == Truth::True) return EventStatus::True;
    if (t == Truth::False) return EventStatus::False;
  }
  return EventStatus::Undecided;
}

// Status when digit k is not in the view.
inline EventStatus missing_digit(const cf::ContinuedFractionView& v) {
  return v.terminated() ? EventStatus::Terminated : EventStatus::Undecided;
}

// D and product events need T^n(x); past the last digit of a rational the
// expansion has ended.
inline std::optional<EventStatus> tail_unavailable(const cf::ContinuedFractionView& v, std::size_t n) {
  if (v.terminated()) {
    if (n >= v.digits()) return EventStatus::Terminated;
    return std::nullopt;
  }
  if (n > v.digits()) return EventStatus::Undecided;
  return std::nullopt;
}

inline cf::ContinuedFractionView view_for(const cf::RealInput& x, const Horizon& h) {
  h.validate();
  return cf::ContinuedFractionView(x, h.end + 1);
}

inline MembershipReport finish(SetTag tag, const Horizon& h, std::vector<EventStatus> events, bool all_n) {
  MembershipReport r;
  r.set = tag;
  r.horizon = h;
  r.events = std::move(events);
  bool any_undecided = false;
  for (std::size_t i = 0; i < r.events.size(); ++i) {
    if (r.events[i] == EventStatus::True) r.witnesses.push_back(h.start + i);
    if (r.events[i] == EventStatus::False && !r.failing_index) r.failing_index = h.start + i;
    any_undecided = any_undecided || r.events[i] == EventStatus::Undecided;
  }
  if (all_n) {
    if (r.failing_index) {
      r.verdict = Verdict::EventFailsAt;
    } else if (any_undecided) {
      r.verdict = Verdict::UndecidedAtPrecision;
    } else {
      r.verdict = Verdict::AllEventsHold;
      if (r.witnesses.empty()) r.note = "vacuous: no decided index in the horizon";
    }
  } else {
    r.failing_index.reset();
    if (!r.witnesses.empty()) {
      r.verdict = Verdict::WitnessesFound;
    } else if (any_undecided) {
      r.verdict = Verdict::UndecidedAtPrecision;
    } else {
      r.verdict = Verdict::NoWitnessUpToHorizon;
    }
  }
  if (r.count(EventStatus::Terminated) > 0) {
    if (!r.note.empty()) r.note += "; ";
    r.note += "rational input: indices past the last digit are terminated";
  }
  return r;
}

template <class EventAt>
MembershipReport run(SetTag tag, const Horizon& h, bool all_n, EventAt event_at) {
  std::vector<EventStatus> events;
  events.reserve(h.size());
  for (std::size_t n = h.start; n <= h.end; ++n) events.push_back(event_at(n));
  return finish(tag, h, std::move(events), all_n);
}

inline Interval product_of_digits(const cf::ContinuedFractionView& v, std::size_t n) {
  return Interval(Integer(v.digit(n) * v.digit(n + 1)));
}

}  // namespace detail

// Event at n: |q_{n-1} x - p_{n-1}| < psi(q_n), via 1/(q_n + T^n(x) q_{n-1}).
inline MembershipReport dirichlet_events(const cf::ContinuedFractionView& v, const ApproxFunction& psi,
                                         const Horizon& h) {
  return detail::run(SetTag::D, h, true, [&](std::size_t n) {
    if (auto s = detail::tail_unavailable(v, n)) return *s;
    const Integer& q = v.table().q(static_cast<long>(n));
    if (!psi.in_domain(q)) return EventStatus::OutOfDomain;
    Real form = cf::dirichlet_form(v, n);
    return detail::decide(h, [&](unsigned bits) { return less(form, psi.value(q, bits)); });
  });
}

// Event at n: T^n(x) q_{n-1}/q_n > 1/Psi(q_n).
inline MembershipReport product_events(const cf::ContinuedFractionView& v, const AuxFunction& aux,
                                       const Horizon& h) {
  return detail::run(SetTag::Product, h, true, [&](std::size_t n) {
    if (auto s = detail::tail_unavailable(v, n)) return *s;
    const auto& t = v.table();
    long k = static_cast<long>(n);
    if (!aux.in_domain(t.q(k))) return EventStatus::OutOfDomain;
    Real lhs = v.tail(n) * Real(make_rational(t.q(k - 1), t.q(k)));
    return detail::decide(h, [&](unsigned bits) { return greater(lhs, aux.value(t.q(k), bits).reciprocal()); });
  });
}

// Event at n: a_n a_{n+1} > Psi(q_n).
inline MembershipReport g_membership(const cf::ContinuedFractionView& v, const AuxFunction& aux, const Horizon& h) {
  return detail::run(SetTag::G, h, false, [&](std::size_t n) {
    if (!v.has_digit(n + 1)) return detail::missing_digit(v);
    const Integer& q = v.table().q(static_cast<long>(n));
    if (!aux.in_domain(q)) return EventStatus::OutOfDomain;
    Interval prod = detail::product_of_digits(v, n);
    return detail::decide(h, [&](unsigned bits) { return greater(prod, aux.value(q, bits)); });
  });
}

// Event at n: a_{n+1} > Psi(q_n).
inline MembershipReport g1_membership(const cf::ContinuedFractionView& v, const AuxFunction& aux, const Horizon& h) {
  return detail::run(SetTag::G1, h, false, [&](std::size_t n) {
    if (!v.has_digit(n + 1)) return detail::missing_digit(v);
    const Integer& q = v.table().q(static_cast<long>(n));
    if (!aux.in_domain(q)) return EventStatus::OutOfDomain;
    Interval digit(v.digit(n + 1));
    return detail::decide(h, [&](unsigned bits) { return greater(digit, aux.value(q, bits)); });
  });
}

// Event at n: |x - p_n/q_n| < 1/(q_n^2 Psi(q_n)), tested along convergents.
inline MembershipReport k_membership(const cf::ContinuedFractionView& v, const AuxFunction& aux, const Horizon& h) {
  auto r = detail::run(SetTag::K, h, false, [&](std::size_t n) {
    if (!v.has_digit(n + 1)) return detail::missing_digit(v);
    const auto& t = v.table();
    long k = static_cast<long>(n);
    if (!aux.in_domain(t.q(k))) return EventStatus::OutOfDomain;
    // |x - p_n/q_n| = 1/(q_n (q_{n+1} + T^{n+1}(x) q_n))
    Real dist = (Real(t.q(k)) * (Real(t.q(k + 1)) + v.tail(n + 1) * Real(t.q(k)))).reciprocal();
    Integer qq = t.q(k) * t.q(k);
    return detail::decide(h, [&](unsigned bits) {
      return less(dist, (Interval(qq) * aux.value(t.q(k), bits)).reciprocal());
    });
  });
  std::string scope = "convergent witnesses only; complete when Psi >= 2 (Legendre), a lower bound otherwise";
  r.note = r.note.empty() ? scope : scope + "; " + r.note;
  return r;
}

// Event at n: a_n a_{n+1} >= phi(n).
inline MembershipReport f_membership(const cf::ContinuedFractionView& v, const RateFunction& phi, const Horizon& h) {
  return detail::run(SetTag::F, h, false, [&](std::size_t n) {
    if (!v.has_digit(n + 1)) return detail::missing_digit(v);
    Interval prod = detail::product_of_digits(v, n);
    return detail::decide(h, [&](unsigned bits) { return greater_equal(prod, phi.value(n, bits)); });
  });
}

inline MembershipReport dirichlet_events(const cf::RealInput& x, const ApproxFunction& psi, const Horizon& h) {
  return dirichlet_events(detail::view_for(x, h), psi, h);
}
inline MembershipReport product_events(const cf::RealInput& x, const AuxFunction& aux, const Horizon& h) {
  return product_events(detail::view_for(x, h), aux, h);
}
inline MembershipReport g_membership(const cf::RealInput& x, const AuxFunction& aux, const Horizon& h) {
  return g_membership(detail::view_for(x, h), aux, h);
}
inline MembershipReport g1_membership(const cf::RealInput& x, const AuxFunction& aux, const Horizon& h) {
  return g1_membership(detail::view_for(x, h), aux, h);
}
inline MembershipReport k_membership(const cf::RealInput& x, const AuxFunction& aux, const Horizon& h) {
  return k_membership(detail::view_for(x, h), aux, h);
}
inline MembershipReport f_membership(const cf::RealInput& x, const RateFunction& phi, const Horizon& h) {
  return f_membership(detail::view_for(x, h), phi, h);
}

}  // namespace dirichlet_lab::sets
