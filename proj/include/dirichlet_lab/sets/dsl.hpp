#pragma once

// Function-family strings:
//
//   [psi:] power a=1 tau=1/2 t0=2 | log beta=5/2 | scaled c=0.9 | table points=2:0.4,4:0.2
//   [Psi:] power tau=1 scale=1 | log beta=2 t0=16 | const c=9 | table points=... | from-psi <psi spec>
//   [phi:] const c=2 | power c=1 e=1 | table points=...
//
// Every numeric parameter is parsed exactly into a rational. Unknown or
// repeated keys are errors.

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dirichlet_lab/sets/functions.hpp"

namespace dirichlet_lab::sets {

namespace dsl {

struct Spec {
  std::string family;
  std::map<std::string, std::string> params;
  std::string rest;  // unparsed remainder after family, used by from-psi
  std::string source;

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, "'" + source + "': " + what);
  }

  Rational number(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) error("missing parameter " + key);
    try {
      return parse_rational(it->second);
    } catch (const Error&) {
      error("parameter " + key + " is not a number: " + it->second);
    }
  }

  Rational number(const std::string& key, const Rational& fallback) const {
    return params.count(key) ? number(key) : fallback;
  }

  std::optional<Rational> optional_number(const std::string& key) const {
    if (!params.count(key)) return std::nullopt;
    return number(key);
  }

  void allow(std::initializer_list<std::string_view> keys) const {
    for (const auto& [k, v] : params) {
      bool ok = false;
      for (auto key : keys) ok = ok || key == k;
      if (!ok) error("unknown parameter " + k + " for family " + family);
    }
  }

  TableFamily table() const {
    auto it = params.find("points");
    if (it == params.end()) error("table needs points=t:v,t:v,...");
    TableFamily out;
    std::stringstream in(it->second);
    std::string item;
    while (std::getline(in, item, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos) error("table point without ':' in " + item);
      try {
        out.points.emplace_back(parse_rational(item.substr(0, colon)), parse_rational(item.substr(colon + 1)));
      } catch (const Error&) {
        error("bad table point " + item);
      }
    }
    try {
      out.validate();
    } catch (const Error& e) {
      error(e.what());
    }
    return out;
  }
};

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

// Splits "[prefix:] family k=v k=v"; the prefix must be one of `prefixes`.
inline Spec split(std::string_view text, std::initializer_list<std::string_view> prefixes) {
  Spec spec;
  spec.source = std::string(text);
  std::string body = trim(text);
  auto colon = body.find(':');
  auto space = body.find_first_of(" \t");
  if (colon != std::string::npos && (space == std::string::npos || colon < space)) {
    std::string prefix = trim(body.substr(0, colon));
    bool ok = false;
    for (auto p : prefixes) ok = ok || p == prefix;
    if (!ok) spec.error("unexpected prefix '" + prefix + "'");
    body = trim(body.substr(colon + 1));
  }
  std::istringstream in(body);
  if (!(in >> spec.family)) spec.error("missing family name");
  std::getline(in, spec.rest);
  spec.rest = trim(spec.rest);
  if (spec.family == "from-psi") return spec;
  std::istringstream params(spec.rest);
  std::string token;
  while (params >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == token.size()) spec.error("expected key=value, got " + token);
    std::string key = token.substr(0, eq);
    if (!spec.params.emplace(key, token.substr(eq + 1)).second) spec.error("repeated parameter " + key);
  }
  return spec;
}

}  // namespace dsl

inline ApproxFunction parse_approx(std::string_view text) {
  dsl::Spec spec = dsl::split(text, {"psi"});
  auto t0 = spec.optional_number("t0");
  if (spec.family == "power") {
    spec.allow({"a", "tau", "t0"});
    return ApproxFunction(PowerDirichlet{spec.number("a", Rational(1)), spec.number("tau")}, t0);
  }
  if (spec.family == "log") {
    spec.allow({"beta", "t0"});
    return ApproxFunction(LogDirichlet{spec.number("beta")}, t0);
  }
  if (spec.family == "scaled") {
    spec.allow({"c", "t0"});
    return ApproxFunction(ScaledDirichlet{spec.number("c")}, t0);
  }
  if (spec.family == "table") {
    spec.allow({"points", "t0"});
    return ApproxFunction(spec.table(), t0);
  }
  spec.error("unknown psi family '" + spec.family + "'");
}

inline AuxFunction parse_aux(std::string_view text) {
  dsl::Spec spec = dsl::split(text, {"Psi"});
  if (spec.family == "from-psi") return AuxFunction::derived(parse_approx(spec.rest));
  auto t0 = spec.optional_number("t0");
  if (spec.family == "power") {
    spec.allow({"tau", "scale", "t0"});
    return AuxFunction(PowerAux{spec.number("tau"), spec.number("scale", Rational(1))}, t0);
  }
  if (spec.family == "log") {
    spec.allow({"beta", "t0"});
    return AuxFunction(LogAux{spec.number("beta")}, t0);
  }
  if (spec.family == "const") {
    spec.allow({"c", "t0"});
    return AuxFunction(ConstAux{spec.number("c")}, t0);
  }
  if (spec.family == "table") {
    spec.allow({"points", "t0"});
    return AuxFunction(spec.table(), t0);
  }
  spec.error("unknown Psi family '" + spec.family + "'");
}

inline RateFunction parse_rate(std::string_view text) {
  dsl::Spec spec = dsl::split(text, {"phi"});
  if (spec.family == "const") {
    spec.allow({"c"});
    return RateFunction::constant(spec.number("c"));
  }
  if (spec.family == "power") {
    spec.allow({"c", "e"});
    return RateFunction(PowerPhi{spec.number("c", Rational(1)), spec.number("e")});
  }
  if (spec.family == "table") {
    spec.allow({"points"});
    return RateFunction(spec.table());
  }
  spec.error("unknown phi family '" + spec.family + "'");
}

}  // namespace dirichlet_lab::sets
