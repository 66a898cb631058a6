#pragma once

// Dimension functions f(r), evaluated in log space: log_value(log r) returns
// log f(r), which keeps arguments like 1/(t^2 Psi(t)) representable for any t.

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "dirichlet_lab/sets/dsl.hpp"

namespace dirichlet_lab::criteria {

// f(r) ~ C r^sigma (log 1/r)^kappa as r -> 0.
struct LogPowerRate {
  long double log_c = 0;
  Rational sigma{1}, kappa{0};
};

// f(r) = r^s, 0 <= s <= 1.
struct PowerLaw {
  Rational s;
};

// f(r) = r log(1/r) for r <= 1/e, continued as f(r) = r above 1/e.
struct XLogX {};

struct CustomDimension {
  std::string name;
  std::function<long double(long double)> log_value;  // log r -> log f(r)
  std::optional<LogPowerRate> rate;                   // declared envelope, if any
  std::optional<long double> ratio_limsup;            // declared limsup f(Bx)/f(x) is B^this (if given)
};

class DimensionFunction {
 public:
  using Family = std::variant<PowerLaw, XLogX, CustomDimension>;

  explicit DimensionFunction(Family family) : family_(std::move(family)) {
    if (const auto* p = std::get_if<PowerLaw>(&family_)) {
      require(p->s >= 0 && p->s <= 1, ErrorKind::InvalidArgument, "power dimension function needs 0 <= s <= 1");
    }
    validate();
  }

  const Family& family() const { return family_; }

  bool is_power(const Rational& s) const {
    const auto* p = std::get_if<PowerLaw>(&family_);
    return p && p->s == s;
  }
  bool is_xlogx() const { return std::holds_alternative<XLogX>(family_); }

  long double log_value(long double log_r) const {
    struct Eval {
      long double u;
      long double operator()(const PowerLaw& f) const {
        if (f.s == 0) return 0;
        return to_long_double(f.s) * u;
      }
      long double operator()(const XLogX&) const { return u <= -1 ? u + std::log(-u) : u; }
      long double operator()(const CustomDimension& f) const { return f.log_value(u); }
    };
    return std::visit(Eval{log_r}, family_);
  }

  long double value(long double r) const { return std::exp(log_value(std::log(r))); }

  std::optional<LogPowerRate> rate() const {
    if (const auto* p = std::get_if<PowerLaw>(&family_)) return LogPowerRate{0, p->s, 0};
    if (is_xlogx()) return LogPowerRate{0, Rational(1), Rational(1)};
    return std::get<CustomDimension>(family_).rate;
  }

  // Declared limsup_{x->0} f(Bx)/f(x), when the family knows it.
  std::optional<long double> ratio_limsup(long double B) const {
    if (const auto* p = std::get_if<PowerLaw>(&family_)) return std::pow(B, to_long_double(p->s));
    if (is_xlogx()) return B;
    const auto& c = std::get<CustomDimension>(family_);
    if (c.ratio_limsup) return std::pow(B, *c.ratio_limsup);
    return std::nullopt;
  }

  std::string describe() const {
    if (const auto* p = std::get_if<PowerLaw>(&family_)) return "f: power s=" + p->s.get_str();
    if (is_xlogx()) return "f: xlogx";
    return "f: custom " + std::get<CustomDimension>(family_).name;
  }

 private:
  // Increasing with f -> 0 on the sampling grid r = 2^-k.
  void validate() const {
    if (is_power(Rational(0))) return;  // f = 1: the degenerate H^0 edge case
    long double prev = log_value(std::log(2.0L) * -400);
    require(prev < log_value(-std::log(2.0L)) - 5, ErrorKind::InvalidArgument,
            "dimension function must tend to 0 at 0");
    for (int k = 399; k >= 0; --k) {
      long double cur = log_value(std::log(2.0L) * static_cast<long double>(-k));
      require(std::isfinite(cur) && cur >= prev, ErrorKind::InvalidArgument,
              "dimension function must be increasing on the sampling grid");
      prev = cur;
    }
  }

  Family family_;
};

inline DimensionFunction parse_dimension(std::string_view text) {
  auto spec = sets::dsl::split(text, {"f"});
  if (spec.family == "power") {
    spec.allow({"s"});
    return DimensionFunction(PowerLaw{spec.number("s")});
  }
  if (spec.family == "xlogx") {
    spec.allow({});
    return DimensionFunction(XLogX{});
  }
  spec.error("unknown dimension function family '" + spec.family + "'");
}

}  // namespace dirichlet_lab::criteria
