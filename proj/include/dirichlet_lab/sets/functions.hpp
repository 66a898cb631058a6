#pragma once

// Bit-exact function families for the approximating function psi, the
// auxiliary function Psi(t) = t psi(t) / (1 - t psi(t)) and the index rate phi.
// Parameters are exact rationals. Integer arguments get validated enclosures
// (exact whenever the value is rational); real arguments get long double
// values evaluated in log space, which the series code needs.

#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dirichlet_lab/core/enclosure.hpp"

namespace dirichlet_lab::sets {

class AuxFunction;

// Piecewise-linear interpolation through (t, value) points, t strictly increasing.
struct TableFamily {
  std::vector<std::pair<Rational, Rational>> points;

  Rational at(const Rational& t) const {
    require(!points.empty(), ErrorKind::InvalidArgument, "empty table");
    require(t >= points.front().first && t <= points.back().first, ErrorKind::DomainViolation,
            "table evaluated outside [" + points.front().first.get_str() + ", " + points.back().first.get_str() + "]");
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
      const auto& [t1, v1] = points[i];
      const auto& [t2, v2] = points[i + 1];
      if (t <= t2) return v1 + (v2 - v1) * (t - t1) / (t2 - t1);
    }
    return points.back().second;
  }

  long double at(long double t) const {
    long double lo = to_long_double(points.front().first), hi = to_long_double(points.back().first);
    require(t >= lo && t <= hi, ErrorKind::DomainViolation, "table evaluated outside its range");
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
      long double t1 = to_long_double(points[i].first), t2 = to_long_double(points[i + 1].first);
      if (t <= t2) {
        long double v1 = to_long_double(points[i].second), v2 = to_long_double(points[i + 1].second);
        return v1 + (v2 - v1) * (t - t1) / (t2 - t1);
      }
    }
    return to_long_double(points.back().second);
  }

  void validate() const {
    require(points.size() >= 2, ErrorKind::InvalidArgument, "table needs at least two points");
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
      require(points[i].first < points[i + 1].first, ErrorKind::InvalidArgument, "table abscissae must increase");
  }

  bool non_increasing() const {
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
      if (points[i + 1].second > points[i].second) return false;
    return true;
  }

  bool non_decreasing() const {
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
      if (points[i + 1].second < points[i].second) return false;
    return true;
  }
};

// psi(t) = (1 - a t^-tau) / t
struct PowerDirichlet {
  Rational a, tau;
};
// psi(t) = (1/t)(1 - 1/(log t (log log t)^beta))
struct LogDirichlet {
  Rational beta;
};
// psi(t) = c / t, 0 < c < 1
struct ScaledDirichlet {
  Rational c;
};
// psi(t) = Psi(t) / (t (1 + Psi(t))), the inverse of the auxiliary transform.
struct PsiFromAux {
  std::shared_ptr<const AuxFunction> aux;
};

// Psi(t) = scale * t^tau
struct PowerAux {
  Rational tau, scale{1};
};
// Psi(t) = log t (log log t)^beta
struct LogAux {
  Rational beta;
};
struct ConstAux {
  Rational c;
};

class ApproxFunction;

// Psi obtained from psi through the auxiliary transform.
struct DerivedAux {
  std::shared_ptr<const ApproxFunction> psi;
};

// Leading-order behaviour Psi(t) ~ K t^tau (log t)^lambda (log log t)^mu.
struct AuxAsymptotics {
  long double log_k = 0;
  Rational tau{0}, lambda{0}, mu{0};
};

namespace detail {

inline Interval log_interval(const Integer& t, unsigned bits) { return log(Interval(t), bits); }

inline Interval loglog_interval(const Integer& t, unsigned bits) {
  Interval l = log_interval(t, bits + 16);
  require(l.lo() > 0, ErrorKind::DomainViolation, "log log t needs t > 1");
  return log(l, bits);
}

// log(e^x - 1) style helper: log1p(-e^{-y}) for y > 0.
inline long double log1m_exp(long double y) { return std::log1p(-std::exp(-y)); }

}  // namespace detail

class ApproxFunction {
 public:
  using Family = std::variant<PowerDirichlet, LogDirichlet, ScaledDirichlet, TableFamily, PsiFromAux>;

  ApproxFunction(Family family, std::optional<Rational> t0 = std::nullopt);

  const Family& family() const { return family_; }
  const Rational& t0() const { return t0_; }
  bool in_domain(const Integer& t) const { return Rational(t) >= t0_; }

  // Enclosure of t psi(t); the auxiliary transform is monotone in this value.
  Interval t_psi(const Integer& t, unsigned bits = kDefaultPrecisionBits) const;

  Interval value(const Integer& t, unsigned bits = kDefaultPrecisionBits) const {
    return t_psi(t, bits) * Interval(make_rational(Integer(1), t));
  }

  // Checks psi non-increasing on the listed integer grid (exactly where decidable).
  bool non_increasing_on(const std::vector<Integer>& grid) const;

  std::string describe() const;

 private:
  Family family_;
  Rational t0_;
};

class AuxFunction {
 public:
  using Family = std::variant<PowerAux, LogAux, ConstAux, TableFamily, DerivedAux>;

  AuxFunction(Family family, std::optional<Rational> t0 = std::nullopt, Rational multiplier = Rational(1));

  static AuxFunction derived(const ApproxFunction& psi) {
    return AuxFunction(DerivedAux{std::make_shared<const ApproxFunction>(psi)}, psi.t0());
  }

  const Family& family() const { return family_; }
  const Rational& t0() const { return t0_; }
  const Rational& multiplier() const { return multiplier_; }
  bool in_domain(const Integer& t) const { return Rational(t) >= t0_; }

  // c * Psi, used for K(3 Psi) and G(Psi / 4).
  AuxFunction scaled(const Rational& c) const {
    require(c > 0, ErrorKind::InvalidArgument, "scale must be positive");
    return AuxFunction(family_, t0_, multiplier_ * c);
  }

  Interval value(const Integer& t, unsigned bits = kDefaultPrecisionBits) const;

  // log Psi(t) given log t, for real t (possibly astronomically large).
  long double log_value(long double log_t) const;

  long double value_ld(long double t) const { return std::exp(log_value(std::log(t))); }

  // Leading-order form when the family declares one (tables do not).
  std::optional<AuxAsymptotics> asymptotics() const;

  bool non_decreasing_on(const std::vector<Integer>& grid) const;

  std::string describe() const;

 private:
  Family family_;
  Rational t0_;
  Rational multiplier_;
};

// The identity Psi = u / (1 - u) with u = t psi(t), on enclosures.
inline Interval aux_from_tpsi(const Interval& u) {
  require(u.lo() > 0, ErrorKind::DomainViolation, "t psi(t) must be positive");
  if (u.lo() >= 1) fail(ErrorKind::DomainViolation, "t psi(t) >= 1");
  require(u.hi() < 1, ErrorKind::PrecisionExhausted, "t psi(t) not separated from 1 at this precision");
  return {u.lo() / (1 - u.lo()), u.hi() / (1 - u.hi())};
}

// Psi(t) = t psi(t) / (1 - t psi(t)); DomainViolation when t psi(t) >= 1.
inline Interval aux_transform(const ApproxFunction& psi, const Integer& t, unsigned bits = kDefaultPrecisionBits) {
  require(psi.in_domain(t), ErrorKind::DomainViolation, "t = " + t.get_str() + " below t0 = " + psi.t0().get_str());
  Interval u = psi.t_psi(t, bits);
  if (u.lo() >= 1) fail(ErrorKind::DomainViolation, "t psi(t) >= 1 at t = " + t.get_str());
  return aux_from_tpsi(u);
}

// ---------------------------------------------------------------------------

inline ApproxFunction::ApproxFunction(Family family, std::optional<Rational> t0) : family_(std::move(family)) {
  struct DefaultT0 {
    Rational operator()(const PowerDirichlet& f) const {
      require(f.a > 0 && f.tau > 0, ErrorKind::InvalidArgument, "power psi needs a > 0, tau > 0");
      // smallest integer t with a t^-tau < 1
      long double guess = std::pow(to_long_double(f.a), 1.0L / to_long_double(f.tau));
      return Rational(Integer(static_cast<long>(std::floor(guess)) + 1));
    }
    Rational operator()(const LogDirichlet& f) const {
      require(f.beta >= 0, ErrorKind::InvalidArgument, "log psi needs beta >= 0");
      return Rational(16);
    }
    Rational operator()(const ScaledDirichlet&) const { return Rational(1); }
    Rational operator()(const TableFamily& f) const {
      f.validate();
      return f.points.front().first;
    }
    Rational operator()(const PsiFromAux& f) const { return f.aux->t0(); }
  };
  t0_ = t0 ? *t0 : std::visit(DefaultT0{}, family_);
  require(t0_ >= 1, ErrorKind::InvalidArgument, "t0 must be >= 1");
  if (auto* s = std::get_if<ScaledDirichlet>(&family_)) {
    require(s->c > 0, ErrorKind::InvalidArgument, "scaled psi needs c > 0");
    if (s->c >= 1) fail(ErrorKind::DomainViolation, "t psi(t) = c >= 1 for scaled psi with c = " + s->c.get_str());
  }
}

inline Interval ApproxFunction::t_psi(const Integer& t, unsigned bits) const {
  require(t >= 1, ErrorKind::DomainViolation, "psi evaluated at t < 1");
  struct Eval {
    const Integer& t;
    unsigned bits;
    Interval operator()(const PowerDirichlet& f) const {
      return Interval(1) - Interval(f.a) * pow(Interval(t), -f.tau, bits + 16);
    }
    Interval operator()(const LogDirichlet& f) const {
      Interval l = detail::log_interval(t, bits + 16);
      Interval ll = detail::loglog_interval(t, bits + 16);
      require(ll.lo() > 0, ErrorKind::DomainViolation, "log psi needs log log t > 0");
      return Interval(1) - (l * pow(ll, f.beta, bits + 16)).reciprocal();
    }
    Interval operator()(const ScaledDirichlet& f) const { return Interval(f.c); }
    Interval operator()(const TableFamily& f) const { return Interval(f.at(Rational(t)) * Rational(t)); }
    Interval operator()(const PsiFromAux& f) const {
      Interval psi_big = f.aux->value(t, bits);
      return psi_big / (Interval(1) + psi_big);
    }
  };
  Interval u = std::visit(Eval{t, bits}, family_);
  if (u.lo() >= 1) fail(ErrorKind::DomainViolation, "t psi(t) >= 1 at t = " + t.get_str());
  require(u.hi() > 0, ErrorKind::DomainViolation, "psi(t) <= 0 at t = " + t.get_str());
  return u;
}

inline bool ApproxFunction::non_increasing_on(const std::vector<Integer>& grid) const {
  if (const auto* table = std::get_if<TableFamily>(&family_)) return table->non_increasing();
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (less(value(grid[i]), value(grid[i + 1])) == Truth::True) return false;
  }
  return true;
}

inline std::string ApproxFunction::describe() const {
  struct Describe {
    std::string operator()(const PowerDirichlet& f) const {
      return "psi: power a=" + f.a.get_str() + " tau=" + f.tau.get_str();
    }
    std::string operator()(const LogDirichlet& f) const { return "psi: log beta=" + f.beta.get_str(); }
    std::string operator()(const ScaledDirichlet& f) const { return "psi: scaled c=" + f.c.get_str(); }
    std::string operator()(const TableFamily& f) const {
      return "psi: table points=" + std::to_string(f.points.size());
    }
    std::string operator()(const PsiFromAux& f) const { return "psi: from-Psi (" + f.aux->describe() + ")"; }
  };
  return std::visit(Describe{}, family_) + " t0=" + t0_.get_str();
}

// ---------------------------------------------------------------------------

inline AuxFunction::AuxFunction(Family family, std::optional<Rational> t0, Rational multiplier)
    : family_(std::move(family)), multiplier_(std::move(multiplier)) {
  struct DefaultT0 {
    Rational operator()(const PowerAux& f) const {
      require(f.scale > 0 && f.tau >= 0, ErrorKind::InvalidArgument, "power Psi needs scale > 0, tau >= 0");
      return Rational(1);
    }
    Rational operator()(const LogAux& f) const {
      require(f.beta >= 0, ErrorKind::InvalidArgument, "log Psi needs beta >= 0");
      return Rational(16);
    }
    Rational operator()(const ConstAux& f) const {
      require(f.c > 0, ErrorKind::InvalidArgument, "const Psi needs c > 0");
      return Rational(1);
    }
    Rational operator()(const TableFamily& f) const {
      f.validate();
      for (const auto& [t, v] : f.points) require(v > 0, ErrorKind::InvalidArgument, "Psi table values must be > 0");
      return f.points.front().first;
    }
    Rational operator()(const DerivedAux& f) const { return f.psi->t0(); }
  };
  Rational natural = std::visit(DefaultT0{}, family_);
  t0_ = t0 ? *t0 : natural;
  require(t0_ >= 1, ErrorKind::InvalidArgument, "t0 must be >= 1");
  require(multiplier_ > 0, ErrorKind::InvalidArgument, "multiplier must be positive");
}

inline Interval AuxFunction::value(const Integer& t, unsigned bits) const {
  require(t >= 1, ErrorKind::DomainViolation, "Psi evaluated at t < 1");
  struct Eval {
    const Integer& t;
    unsigned bits;
    Interval operator()(const PowerAux& f) const { return Interval(f.scale) * pow(Interval(t), f.tau, bits); }
    Interval operator()(const LogAux& f) const {
      Interval l = detail::log_interval(t, bits + 16);
      if (f.beta == 0) return l;
      Interval ll = detail::loglog_interval(t, bits + 16);
      require(ll.lo() > 0, ErrorKind::DomainViolation, "log Psi needs log log t > 0");
      return l * pow(ll, f.beta, bits);
    }
    Interval operator()(const ConstAux& f) const { return Interval(f.c); }
    Interval operator()(const TableFamily& f) const { return Interval(f.at(Rational(t))); }
    Interval operator()(const DerivedAux& f) const { return aux_from_tpsi(f.psi->t_psi(t, bits)); }
  };
  Interval v = std::visit(Eval{t, bits}, family_) * Interval(multiplier_);
  require(v.hi() > 0, ErrorKind::DomainViolation, "Psi(t) <= 0 at t = " + t.get_str());
  return v;
}

inline long double AuxFunction::log_value(long double log_t) const {
  struct Eval {
    long double L;
    long double operator()(const PowerAux& f) const {
      return std::log(to_long_double(f.scale)) + to_long_double(f.tau) * L;
    }
    long double operator()(const LogAux& f) const {
      require(L > 1, ErrorKind::DomainViolation, "log Psi needs log t > 1");
      return std::log(L) + to_long_double(f.beta) * std::log(std::log(L));
    }
    long double operator()(const ConstAux& f) const { return std::log(to_long_double(f.c)); }
    long double operator()(const TableFamily& f) const { return std::log(f.at(std::exp(L))); }
    long double operator()(const DerivedAux& f) const {
      struct FromPsi {
        long double L;
        long double operator()(const PowerDirichlet& g) const {
          // Psi = t^tau / a - 1
          long double y = to_long_double(g.tau) * L - std::log(to_long_double(g.a));
          require(y > 0, ErrorKind::DomainViolation, "t psi(t) <= 0");
          return y + detail::log1m_exp(y);
        }
        long double operator()(const LogDirichlet& g) const {
          // Psi = log t (log log t)^beta - 1
          require(L > 1, ErrorKind::DomainViolation, "log psi needs log t > 1");
          long double y = std::log(L) + to_long_double(g.beta) * std::log(std::log(L));
          require(y > 0, ErrorKind::DomainViolation, "t psi(t) <= 0");
          return y + detail::log1m_exp(y);
        }
        long double operator()(const ScaledDirichlet& g) const {
          long double c = to_long_double(g.c);
          return std::log(c / (1 - c));
        }
        long double operator()(const TableFamily& g) const {
          long double t = std::exp(L);
          long double u = g.at(t) * t;
          return std::log(u / (1 - u));
        }
        long double operator()(const PsiFromAux& g) const { return g.aux->log_value(L); }
      };
      return std::visit(FromPsi{L}, f.psi->family());
    }
  };
  return std::visit(Eval{log_t}, family_) + std::log(to_long_double(multiplier_));
}

inline std::optional<AuxAsymptotics> AuxFunction::asymptotics() const {
  long double log_m = std::log(to_long_double(multiplier_));
  struct Asym {
    std::optional<AuxAsymptotics> operator()(const PowerAux& f) const {
      return AuxAsymptotics{std::log(to_long_double(f.scale)), f.tau, 0, 0};
    }
    std::optional<AuxAsymptotics> operator()(const LogAux& f) const { return AuxAsymptotics{0, 0, 1, f.beta}; }
    std::optional<AuxAsymptotics> operator()(const ConstAux& f) const {
      return AuxAsymptotics{std::log(to_long_double(f.c)), 0, 0, 0};
    }
    std::optional<AuxAsymptotics> operator()(const TableFamily&) const { return std::nullopt; }
    std::optional<AuxAsymptotics> operator()(const DerivedAux& f) const {
      struct FromPsi {
        std::optional<AuxAsymptotics> operator()(const PowerDirichlet& g) const {
          return AuxAsymptotics{-std::log(to_long_double(g.a)), g.tau, 0, 0};
        }
        std::optional<AuxAsymptotics> operator()(const LogDirichlet& g) const {
          return AuxAsymptotics{0, 0, 1, g.beta};
        }
        std::optional<AuxAsymptotics> operator()(const ScaledDirichlet& g) const {
          long double c = to_long_double(g.c);
          return AuxAsymptotics{std::log(c / (1 - c)), 0, 0, 0};
        }
        std::optional<AuxAsymptotics> operator()(const TableFamily&) const { return std::nullopt; }
        std::optional<AuxAsymptotics> operator()(const PsiFromAux& g) const { return g.aux->asymptotics(); }
      };
      return std::visit(FromPsi{}, f.psi->family());
    }
  };
  auto out = std::visit(Asym{}, family_);
  if (out) out->log_k += log_m;
  return out;
}

inline bool AuxFunction::non_decreasing_on(const std::vector<Integer>& grid) const {
  if (const auto* table = std::get_if<TableFamily>(&family_)) return table->non_decreasing();
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (greater(value(grid[i]), value(grid[i + 1])) == Truth::True) return false;
  }
  return true;
}

inline std::string AuxFunction::describe() const {
  struct Describe {
    std::string operator()(const PowerAux& f) const {
      return "Psi: power tau=" + f.tau.get_str() + " scale=" + f.scale.get_str();
    }
    std::string operator()(const LogAux& f) const { return "Psi: log beta=" + f.beta.get_str(); }
    std::string operator()(const ConstAux& f) const { return "Psi: const c=" + f.c.get_str(); }
    std::string operator()(const TableFamily& f) const {
      return "Psi: table points=" + std::to_string(f.points.size());
    }
    std::string operator()(const DerivedAux& f) const { return "Psi: from-psi (" + f.psi->describe() + ")"; }
  };
  std::string out = std::visit(Describe{}, family_) + " t0=" + t0_.get_str();
  if (multiplier_ != 1) out += " multiplier=" + multiplier_.get_str();
  return out;
}

// ---------------------------------------------------------------------------

// phi(n) = c n^e
struct PowerPhi {
  Rational c{1}, e{0};
};

// Threshold phi(n) on the index n, for F(phi).
class RateFunction {
 public:
  using Family = std::variant<PowerPhi, TableFamily>;

  explicit RateFunction(Family family) : family_(std::move(family)) {
    if (const auto* p = std::get_if<PowerPhi>(&family_)) {
      require(p->c > 0, ErrorKind::InvalidArgument, "phi needs c > 0");
    } else {
      std::get<TableFamily>(family_).validate();
    }
  }

  static RateFunction constant(const Rational& c) { return RateFunction(PowerPhi{c, 0}); }

  Interval value(std::size_t n, unsigned bits = kDefaultPrecisionBits) const {
    if (const auto* p = std::get_if<PowerPhi>(&family_)) {
      return Interval(p->c) * pow(Interval(Integer(static_cast<unsigned long>(n))), p->e, bits);
    }
    return Interval(std::get<TableFamily>(family_).at(Rational(Integer(static_cast<unsigned long>(n)))));
  }

  std::string describe() const {
    if (const auto* p = std::get_if<PowerPhi>(&family_)) return "phi: power c=" + p->c.get_str() + " e=" + p->e.get_str();
    return "phi: table";
  }

 private:
  Family family_;
};

}  // namespace dirichlet_lab::sets
