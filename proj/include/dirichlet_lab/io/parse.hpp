#pragma once

// Command-line literals: words, points of [0,1), counts.

#include <string>
#include <string_view>

#include "dirichlet_lab/cf/real_input.hpp"

namespace dirichlet_lab::io {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// "(1,2,3)", "[1,2,3]", "1,2,3" or "()".
inline cf::Word parse_word(std::string_view text) {
  std::string s = trim(text);
  if (s.size() >= 2 && ((s.front() == '(' && s.back() == ')') || (s.front() == '[' && s.back() == ']')))
    s = s.substr(1, s.size() - 2);
  cf::Word w;
  if (trim(s).empty()) return w;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    std::string item = trim(std::string_view(s).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    Rational d = parse_rational(item);
    require(is_integer(d) && d >= 1, ErrorKind::ParseError, "partial quotients are positive integers: '" + item + "'");
    w.push_back(d.get_num());
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return w;
}

// "p/q", "golden", "periodic:[pre];[per]", "interval:[lo,hi]", or a decimal
// literal "0.d1...dk" read as a validated interval of half-ulp radius.
inline cf::RealInput parse_real_input(std::string_view text) {
  std::string s = trim(text);
  if (s == "golden") return cf::PeriodicWord(cf::Word(), cf::Word{1});
  if (s.rfind("periodic:", 0) == 0) {
    std::string body = s.substr(9);
    auto semi = body.find(';');
    require(semi != std::string::npos, ErrorKind::ParseError, "periodic input needs 'periodic:[pre];[per]'");
    return cf::PeriodicWord(parse_word(body.substr(0, semi)), parse_word(body.substr(semi + 1)));
  }
  if (s.rfind("interval:", 0) == 0) {
    std::string body = trim(s.substr(9));
    require(body.size() >= 2 && body.front() == '[' && body.back() == ']', ErrorKind::ParseError,
            "interval input needs 'interval:[lo,hi]'");
    body = body.substr(1, body.size() - 2);
    auto comma = body.find(',');
    require(comma != std::string::npos, ErrorKind::ParseError, "interval input needs two endpoints");
    return cf::ValidatedInterval(parse_rational(trim(body.substr(0, comma))), parse_rational(trim(body.substr(comma + 1))));
  }
  if (s.find('.') != std::string::npos && s.find('/') == std::string::npos) return cf::interval_from_decimal(s);
  return cf::ExactRational(parse_rational(s));
}

// Non-negative integer counts, accepting "1e6".
inline std::uint64_t parse_count(std::string_view text) {
  Rational r = parse_rational(trim(text));
  require(is_integer(r) && r >= 0 && mpz_fits_ulong_p(r.get_num_mpz_t()) != 0, ErrorKind::ParseError,
          "not a non-negative integer: '" + std::string(text) + "'");
  return r.get_num().get_ui();
}

}  // namespace dirichlet_lab::io
