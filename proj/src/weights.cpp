#include "pthresh/weights.hpp"

#include <sstream>

#include "pthresh/errors.hpp"

namespace pthresh {

WeightScheme WeightScheme::explicit_list(std::vector<Rational> head, Rational tail) {
  if (head.empty()) throw ValidationError("weight list is empty");
  if (head[0] != Rational(1)) throw ValidationError("weights must start with w_1 = 1");
  for (std::size_t i = 1; i < head.size(); ++i)
    if (head[i] > head[i - 1]) throw ValidationError("weights must be non-increasing");
  if (tail.sign() < 0 || head.back().sign() < 0) throw ValidationError("weights must be non-negative");
  if (tail > head.back()) throw ValidationError("weight tail exceeds last listed weight");
  WeightScheme s(Kind::Explicit);
  s.head_ = std::move(head);
  s.tail_ = std::move(tail);
  return s;
}

WeightScheme WeightScheme::parse(const std::string& text) {
  if (text == "harmonic" || text.empty()) return harmonic();
  if (text == "weak") return weak();
  if (text == "constant") return constant();
  std::vector<Rational> head;
  bool repeat = false;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (repeat) throw ParseError("'...' must be the last weight entry");
    if (item == "...") {
      repeat = true;
      continue;
    }
    head.push_back(Rational::parse(item));
  }
  if (head.empty()) throw ParseError("empty weight list");
  Rational tail = repeat ? head.back() : Rational(0);
  return explicit_list(std::move(head), std::move(tail));
}

Rational WeightScheme::w(int k) const {
  if (k < 1) throw DomainError("weight index must be >= 1");
  switch (kind_) {
    case Kind::Harmonic: return Rational(1, k);
    case Kind::Weak: return k == 1 ? Rational(1) : Rational(0);
    case Kind::Constant: return Rational(1);
    case Kind::Explicit:
      return static_cast<std::size_t>(k) <= head_.size() ? head_[static_cast<std::size_t>(k) - 1] : tail_;
  }
  return Rational(0);
}

Rational WeightScheme::psi(int n) const {
  Rational s;
  for (int k = 1; k <= n; ++k) s += w(k);
  return s;
}

std::string WeightScheme::key() const {
  switch (kind_) {
    case Kind::Harmonic: return "harmonic";
    case Kind::Weak: return "weak";
    case Kind::Constant: return "constant";
    case Kind::Explicit: break;
  }
  std::string s;
  for (std::size_t i = 0; i < head_.size(); ++i) s += (i ? "," : "") + head_[i].str();
  if (tail_.is_zero()) return s;
  if (tail_ == head_.back()) return s + ",...";
  return s + ",tail=" + tail_.str();
}

bool WeightScheme::is_harmonic() const { return kind_ == Kind::Harmonic; }

bool WeightScheme::is_weak() const {
  if (kind_ == Kind::Weak) return true;
  if (kind_ != Kind::Explicit) return false;
  for (std::size_t i = 1; i < head_.size(); ++i)
    if (!head_[i].is_zero()) return false;
  return tail_.is_zero();
}

bool WeightScheme::is_constant() const {
  if (kind_ == Kind::Constant) return true;
  if (kind_ != Kind::Explicit) return false;
  for (const auto& x : head_)
    if (x != Rational(1)) return false;
  return tail_ == Rational(1);
}

}  // namespace pthresh
