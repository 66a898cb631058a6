#pragma once

// Randomized inputs for audits: eventually periodic words (exact quadratic
// irrationals) with geometric digits, and members of the psi / Psi families.

#include <vector>

#include "dirichlet_lab/cf/real_input.hpp"
#include "dirichlet_lab/core/random.hpp"
#include "dirichlet_lab/sets/functions.hpp"

namespace dirichlet_lab::sets {

inline cf::Word random_word(Rng& rng, std::size_t length, std::uint64_t cap = 1000000) {
  cf::Word w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(Integer(static_cast<unsigned long>(rng.geometric_digit(cap))));
  return w;
}

inline cf::PeriodicWord random_periodic(Rng& rng, std::size_t max_preperiod = 3, std::size_t max_period = 4,
                                        std::uint64_t cap = 1000000) {
  cf::Word pre = random_word(rng, rng.uniform(0, max_preperiod), cap);
  cf::Word per = random_word(rng, rng.uniform(1, max_period), cap);
  return cf::PeriodicWord{pre, per};
}

inline ApproxFunction random_approx(Rng& rng) {
  static const std::vector<Rational> cs{make_rational(1, 10), make_rational(1, 5), make_rational(1, 2),
                                        make_rational(4, 5), make_rational(9, 10), make_rational(99, 100)};
  static const std::vector<Rational> as{make_rational(1, 2), Rational(1), Rational(2)};
  static const std::vector<Rational> taus{make_rational(1, 4), make_rational(1, 2), Rational(1), Rational(2)};
  static const std::vector<Rational> betas{Rational(1), Rational(2), make_rational(5, 2), Rational(3)};
  switch (rng.uniform(0, 2)) {
    case 0: return ApproxFunction(ScaledDirichlet{rng.pick(cs)});
    case 1: return ApproxFunction(PowerDirichlet{rng.pick(as), rng.pick(taus)});
    default: return ApproxFunction(LogDirichlet{rng.pick(betas)});
  }
}

inline AuxFunction random_aux(Rng& rng) {
  static const std::vector<Rational> scales{make_rational(1, 4), make_rational(1, 2), Rational(1), Rational(3),
                                            Rational(9)};
  static const std::vector<Rational> taus{Rational(0), make_rational(1, 2), Rational(1), Rational(2)};
  static const std::vector<Rational> betas{Rational(0), Rational(1), Rational(2), make_rational(5, 2)};
  switch (rng.uniform(0, 2)) {
    case 0: return AuxFunction(PowerAux{rng.pick(taus), rng.pick(scales)});
    case 1: return AuxFunction(ConstAux{rng.pick(scales)});
    default: return AuxFunction(LogAux{rng.pick(betas)}, Rational(3));
  }
}

}  // namespace dirichlet_lab::sets
