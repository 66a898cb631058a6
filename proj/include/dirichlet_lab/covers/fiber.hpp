#pragma once

// Fibers of g(w) = (q_{n-1}(w), q_n(w)): for p/q = [b_1..b_k] the words
// (b_k, .., b_1) and (1, b_k - 1, b_{k-1}, .., b_1) reach the pair (p, q).

#include <string>
#include <vector>

#include "dirichlet_lab/cf/expansion.hpp"

namespace dirichlet_lab::covers {

struct Fiber {
  Integer p, q;
  std::vector<cf::Word> words;
  bool verified = false;  // every word maps back to (p, q)
  std::string note;
};

inline std::pair<Integer, Integer> g_map(const cf::Word& w) {
  cf::ConvergentTable t(w);
  long n = static_cast<long>(w.size());
  return {t.q(n - 1), t.q(n)};
}

inline Fiber fiber(const Integer& p, const Integer& q) {
  require(p >= 1 && p <= q, ErrorKind::InvalidPair, "fiber needs 1 <= p <= q");
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  require(g == 1, ErrorKind::InvalidPair, "p and q must be coprime");
  Fiber out{p, q, {}, false, {}};
  if (p == q) {
    out.words.push_back(cf::Word{1});
    out.note = "degenerate pair (1,1): the twin word would need a zero digit";
  } else {
    cf::Word b = cf::continued_fraction(cf::ExactRational{make_rational(p, q)}, mpz_sizeinbase(q.get_mpz_t(), 2) * 2 + 2)
                     .word;
    cf::Word reversed = b.reversed();
    out.words.push_back(reversed);
    std::vector<Integer> twin{Integer(1), reversed.digit(1) - 1};
    for (std::size_t i = 2; i <= reversed.size(); ++i) twin.push_back(reversed.digit(i));
    out.words.push_back(cf::Word(twin));
  }
  out.verified = true;
  for (const auto& w : out.words) {
    auto [a, b] = g_map(w);
    out.verified = out.verified && a == p && b == q;
  }
  return out;
}

}  // namespace dirichlet_lab::covers
