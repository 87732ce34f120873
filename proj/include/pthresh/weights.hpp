#pragma once

#include <string>
#include <vector>

#include "pthresh/rational.hpp"

namespace pthresh {

// Non-increasing weights w_1 = 1 >= w_2 >= ... >= 0 used by Thiele and Borda.
class WeightScheme {
 public:
  enum class Kind { Harmonic, Weak, Constant, Explicit };

  WeightScheme() = default;
  static WeightScheme harmonic() { return WeightScheme(Kind::Harmonic); }
  static WeightScheme weak() { return WeightScheme(Kind::Weak); }
  static WeightScheme constant() { return WeightScheme(Kind::Constant); }
  static WeightScheme explicit_list(std::vector<Rational> head, Rational tail);
  // "harmonic", "weak", "constant", or "1,3/4,1/2" (tail 0) / "1,1/2,..." (last repeats).
  static WeightScheme parse(const std::string& text);

  Kind kind() const { return kind_; }
  const std::vector<Rational>& head() const { return head_; }
  const Rational& tail() const { return tail_; }

  Rational w(int k) const;
  // psi(n) = w_1 + ... + w_n.
  Rational psi(int n) const;
  // Stable text form; also the memo key.
  std::string key() const;

  bool is_harmonic() const;
  bool is_weak() const;
  bool is_constant() const;

  friend bool operator==(const WeightScheme& a, const WeightScheme& b) { return a.key() == b.key(); }

 private:
  explicit WeightScheme(Kind k) : kind_(k) {}
  Kind kind_ = Kind::Harmonic;
  std::vector<Rational> head_;
  Rational tail_;
};

}  // namespace pthresh
