#pragma once

#include <vector>

#include "dirichlet_lab/cf/word.hpp"

namespace dirichlet_lab::cf {

// Rows (p_k, q_k) for k = -1, ..., n with p_{-1} = 1, q_{-1} = 0, p_0 = 0, q_0 = 1
// and p_{k+1} = a_{k+1} p_k + p_{k-1}, q_{k+1} = a_{k+1} q_k + q_{k-1}.
class ConvergentTable {
 public:
  ConvergentTable() : p_{1, 0}, q_{0, 1} {}

  explicit ConvergentTable(const Word& w) : ConvergentTable() {
    p_.reserve(w.size() + 2);
    q_.reserve(w.size() + 2);
    for (const auto& a : w) append(a);
  }

  void append(const Integer& a) {
    std::size_t m = p_.size();
    p_.push_back(a * p_[m - 1] + p_[m - 2]);
    q_.push_back(a * q_[m - 1] + q_[m - 2]);
  }

  // Index of the last row, i.e. the word length n.
  std::size_t depth() const { return p_.size() - 2; }

  const Integer& p(long k) const { return p_.at(static_cast<std::size_t>(k + 1)); }
  const Integer& q(long k) const { return q_.at(static_cast<std::size_t>(k + 1)); }

  Rational convergent(long k) const { return make_rational(p(k), q(k)); }

 private:
  std::vector<Integer> p_;
  std::vector<Integer> q_;
};

inline ConvergentTable convergents(const Word& w) { return ConvergentTable(w); }

// [a_1, ..., a_n] by bottom-up nested-fraction evaluation. Deliberately does
// not use the convergent recurrence so it can cross-check it.
inline Rational evaluate(const Word& w) {
  require(!w.empty(), ErrorKind::EmptyWord, "evaluate needs a nonempty word");
  Rational value(0);
  for (auto it = w.digits().rbegin(); it != w.digits().rend(); ++it) {
    value = 1 / (Rational(*it) + value);
  }
  return value;
}

// q_{n-1}/q_n, which equals [a_n, ..., a_1].
inline Rational backward_ratio(const Word& w) {
  require(!w.empty(), ErrorKind::EmptyWord, "backward_ratio needs a nonempty word");
  ConvergentTable t(w);
  long n = static_cast<long>(w.size());
  return make_rational(t.q(n - 1), t.q(n));
}

}  // namespace dirichlet_lab::cf
