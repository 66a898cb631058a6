#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "dirichlet_lab/core/exact.hpp"

namespace dirichlet_lab::cf {

// A finite sequence of partial quotients a_1, ..., a_n, every digit >= 1.
class Word {
 public:
  Word() = default;

  Word(std::initializer_list<long> digits) {
    digits_.reserve(digits.size());
    for (long d : digits) push_back(Integer(d));
  }

  explicit Word(std::vector<Integer> digits) : digits_(std::move(digits)) {
    for (const auto& d : digits_) require(d >= 1, ErrorKind::InvalidArgument, "partial quotients must be >= 1");
  }

  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }

  // 1-based access a_k, matching the usual indexing of partial quotients.
  const Integer& digit(std::size_t k) const { return digits_.at(k - 1); }
  const Integer& operator[](std::size_t i) const { return digits_[i]; }
  const Integer& back() const { return digits_.back(); }

  auto begin() const { return digits_.begin(); }
  auto end() const { return digits_.end(); }
  const std::vector<Integer>& digits() const { return digits_; }

  void push_back(const Integer& d) {
    require(d >= 1, ErrorKind::InvalidArgument, "partial quotients must be >= 1");
    digits_.push_back(d);
  }

  Word extended(const Integer& d) const {
    Word w(*this);
    w.push_back(d);
    return w;
  }

  Word reversed() const {
    Word w(*this);
    std::reverse(w.digits_.begin(), w.digits_.end());
    return w;
  }

  Word prefix(std::size_t n) const {
    Word w;
    w.digits_.assign(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(std::min(n, size())));
    return w;
  }

  Word suffix_from(std::size_t offset) const {
    Word w;
    if (offset < size()) w.digits_.assign(digits_.begin() + static_cast<std::ptrdiff_t>(offset), digits_.end());
    return w;
  }

  // Canonical form of a rational's full expansion: last digit >= 2 unless n == 1.
  bool is_canonical() const { return size() <= 1 || digits_.back() >= 2; }

  friend bool operator==(const Word&, const Word&) = default;

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += ",";
      out += digits_[i].get_str();
    }
    return out + ")";
  }

 private:
  std::vector<Integer> digits_;
};

}  // namespace dirichlet_lab::cf
