#pragma once

#include <vector>

#include "dirichlet_lab/cf/expansion.hpp"
#include "dirichlet_lab/core/real.hpp"

namespace dirichlet_lab::cf {

// Digits, convergents and exact (or enclosed) tails T^n(x) of one input, up
// to a fixed depth. Rational inputs stop at their last digit; interval inputs
// stop at the last certified digit.
class ContinuedFractionView {
 public:
  ContinuedFractionView(const RealInput& x, std::size_t depth) : input_(x) {
    require(depth >= 1, ErrorKind::InvalidArgument, "view depth must be >= 1");
    if (const auto* r = std::get_if<ExactRational>(&x)) {
      init_rational(r->value, depth);
    } else if (const auto* w = std::get_if<PeriodicWord>(&x)) {
      init_periodic(*w, depth);
    } else {
      init_interval(std::get<ValidatedInterval>(x), depth);
    }
    for (const auto& a : word_) table_.append(a);
  }

  const RealInput& input() const { return input_; }
  const Word& word() const { return word_; }
  const ConvergentTable& table() const { return table_; }

  // Number of digits known (certified) in this view.
  std::size_t digits() const { return word_.size(); }

  // The expansion provably ends after digits() digits (rational input).
  bool terminated() const { return terminated_; }

  // Interval input ran out of certified digits before the requested depth.
  bool precision_exhausted() const { return exhausted_; }

  bool is_exact() const { return !std::holds_alternative<ValidatedInterval>(input_); }

  const Integer& digit(std::size_t k) const { return word_.digit(k); }
  bool has_digit(std::size_t k) const { return k >= 1 && k <= word_.size(); }

  // T^n(x); available for 0 <= n <= digits().
  const Real& tail(std::size_t n) const {
    require(n < tails_.size(), ErrorKind::PrecisionExhausted, "tail T^" + std::to_string(n) + "(x) not available");
    return tails_[n];
  }

  const Real& value() const { return tail(0); }

 private:
  void init_rational(const Rational& v, std::size_t depth) {
    Rational t = v;
    tails_.emplace_back(t);
    while (t != 0 && word_.size() < depth + 1) {
      Rational inv = 1 / t;
      Integer a = floor_of(inv);
      word_.push_back(a);
      t = inv - Rational(a);
      tails_.emplace_back(t);
    }
    terminated_ = t == 0;
  }

  void init_periodic(const PeriodicWord& w, std::size_t depth) {
    std::size_t total = depth + 1;
    std::size_t m = w.preperiod.size(), k = w.period.size();
    for (std::size_t i = 0; i < total; ++i) word_.push_back(i < m ? w.preperiod[i] : w.period[(i - m) % k]);

    std::vector<QuadraticSurd> rotations;
    rotations.reserve(k);
    rotations.push_back(purely_periodic_value(w.period));
    for (std::size_t j = 0; j + 1 < k; ++j) {
      rotations.push_back(rotations.back().reciprocal() - QuadraticSurd(w.period[j]));
    }
    std::vector<QuadraticSurd> pre_tails(m + 1);
    pre_tails[m] = rotations[0];
    for (std::size_t i = m; i-- > 0;) pre_tails[i] = (QuadraticSurd(w.preperiod[i]) + pre_tails[i + 1]).reciprocal();

    tails_.reserve(total + 1);
    for (std::size_t n = 0; n <= total; ++n) tails_.emplace_back(n <= m ? pre_tails[n] : rotations[(n - m) % k]);
  }

  void init_interval(const ValidatedInterval& v, std::size_t depth) {
    Rational lo = v.lo, hi = v.hi;
    tails_.emplace_back(lo == hi ? Real(lo) : Real(Interval(lo, hi)));
    while (word_.size() < depth + 1) {
      if (lo == 0 && hi == 0) {
        terminated_ = true;
        return;
      }
      auto step = gauss_step_interval(lo, hi);
      if (!step) {
        exhausted_ = true;
        return;
      }
      word_.push_back(step->first);
      lo = step->second.lo;
      hi = step->second.hi;
      tails_.emplace_back(lo == hi ? Real(lo) : Real(Interval(lo, hi)));
    }
  }

  RealInput input_;
  Word word_;
  ConvergentTable table_;
  std::vector<Real> tails_;
  bool terminated_ = false;
  bool exhausted_ = false;
};

}  // namespace dirichlet_lab::cf
