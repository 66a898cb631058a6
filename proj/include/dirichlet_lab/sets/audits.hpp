#pragma once

// Pointwise audits of the event-level implications between the sets:
// the two branches of the digit-product bounds, the inclusion chain
// K(3 Psi) => G1(Psi) => G(Psi) => not D(psi) => G(Psi/4), and the agreement
// of the two routes to the Dirichlet event.

#include <string>
#include <vector>

#include "dirichlet_lab/sets/membership.hpp"

namespace dirichlet_lab::sets {

struct ImplicationCheck {
  std::string name;
  std::size_t fired = 0;      // premise decided true
  std::size_t confirmed = 0;  // premise true and conclusion decided as predicted
  std::size_t undecided = 0;  // premise true but conclusion undecided
  std::vector<std::size_t> violations;
};

struct AuditReport {
  std::string kind;
  Horizon horizon;
  std::vector<ImplicationCheck> checks;

  std::size_t violations() const {
    std::size_t v = 0;
    for (const auto& c : checks) v += c.violations.size();
    return v;
  }
  const ImplicationCheck& check(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    fail(ErrorKind::InvalidArgument, "no check named " + name);
  }
};

namespace detail {

// premise (event == premise_value) at n  ==>  conclusion event == expected at n.
inline ImplicationCheck implication(std::string name, const MembershipReport& premise, EventStatus premise_value,
                                    const MembershipReport& conclusion, EventStatus expected) {
  ImplicationCheck c;
  c.name = std::move(name);
  const Horizon& h = premise.horizon;
  for (std::size_t n = h.start; n <= h.end; ++n) {
    if (premise.at(n) != premise_value) continue;
    ++c.fired;
    EventStatus got = conclusion.at(n);
    if (got == expected) {
      ++c.confirmed;
    } else if (got == EventStatus::True || got == EventStatus::False) {
      c.violations.push_back(n);
    } else {
      ++c.undecided;
    }
  }
  return c;
}

}  // namespace detail

// (i)  a_n a_{n+1} <= Psi(q_n)/4  ==>  product event holds at n
// (ii) a_n a_{n+1} >  Psi(q_n)    ==>  product event fails at n
inline AuditReport kwlem_audit(const cf::ContinuedFractionView& v, const AuxFunction& aux, const Horizon& h) {
  MembershipReport product = product_events(v, aux, h);
  MembershipReport quarter = g_membership(v, aux.scaled(make_rational(1, 4)), h);
  MembershipReport full = g_membership(v, aux, h);
  AuditReport r{"kwlem", h, {}};
  r.checks.push_back(detail::implication("small-product-implies-event", quarter, EventStatus::False, product,
                                         EventStatus::True));
  r.checks.push_back(
      detail::implication("large-product-implies-failure", full, EventStatus::True, product, EventStatus::False));
  return r;
}

inline AuditReport inclusion_audit(const cf::ContinuedFractionView& v, const ApproxFunction& psi, const Horizon& h) {
  AuxFunction aux = AuxFunction::derived(psi);
  MembershipReport k3 = k_membership(v, aux.scaled(Rational(3)), h);
  MembershipReport g1 = g1_membership(v, aux, h);
  MembershipReport g = g_membership(v, aux, h);
  MembershipReport d = dirichlet_events(v, psi, h);
  MembershipReport g4 = g_membership(v, aux.scaled(make_rational(1, 4)), h);
  AuditReport r{"inclusion", h, {}};
  r.checks.push_back(detail::implication("K(3Psi)=>G1(Psi)", k3, EventStatus::True, g1, EventStatus::True));
  r.checks.push_back(detail::implication("G1(Psi)=>G(Psi)", g1, EventStatus::True, g, EventStatus::True));
  r.checks.push_back(detail::implication("G(Psi)=>notD(psi)", g, EventStatus::True, d, EventStatus::False));
  r.checks.push_back(detail::implication("notD(psi)=>G(Psi/4)", d, EventStatus::False, g4, EventStatus::True));
  return r;
}

struct EquivalenceReport {
  MembershipReport dirichlet, product;
  std::size_t compared = 0;
  std::vector<std::size_t> mismatches;
};

// The Dirichlet event through psi and through the tail product with the
// derived Psi; must agree wherever both are decided.
inline EquivalenceReport equivalence_audit(const cf::ContinuedFractionView& v, const ApproxFunction& psi,
                                           const Horizon& h) {
  EquivalenceReport r{dirichlet_events(v, psi, h), product_events(v, AuxFunction::derived(psi), h), 0, {}};
  for (std::size_t n = h.start; n <= h.end; ++n) {
    EventStatus a = r.dirichlet.at(n), b = r.product.at(n);
    bool da = a == EventStatus::True || a == EventStatus::False;
    bool db = b == EventStatus::True || b == EventStatus::False;
    if (!da || !db) continue;
    ++r.compared;
    if (a != b) r.mismatches.push_back(n);
  }
  return r;
}

inline AuditReport kwlem_audit(const cf::RealInput& x, const AuxFunction& aux, const Horizon& h) {
  return kwlem_audit(detail::view_for(x, h), aux, h);
}
inline AuditReport inclusion_audit(const cf::RealInput& x, const ApproxFunction& psi, const Horizon& h) {
  return inclusion_audit(detail::view_for(x, h), psi, h);
}
inline EquivalenceReport equivalence_audit(const cf::RealInput& x, const ApproxFunction& psi, const Horizon& h) {
  return equivalence_audit(detail::view_for(x, h), psi, h);
}

}  // namespace dirichlet_lab::sets
