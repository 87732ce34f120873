#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pthresh {

// Exact fraction in canonical form (positive denominator, reduced).
class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}
  Rational(long n, long d);
  explicit Rational(mpq_class q);

  static Rational parse(std::string_view text);

  std::string str() const;
  // Rounded to `digits` places after the point. Display only.
  std::string decimal(int digits) const;
  double to_double() const { return q_.get_d(); }

  const mpq_class& raw() const { return q_; }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  Rational floor() const;
  Rational ceil() const;
  Rational abs() const;
  Rational inverse() const;
  // Value as long; throws DomainError when not an integer or out of range.
  long to_long() const;
  std::size_t hash() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// H_n = 1 + 1/2 + ... + 1/n.
Rational harmonic(int n);

}  // namespace pthresh

template <>
struct std::hash<pthresh::Rational> {
  std::size_t operator()(const pthresh::Rational& r) const { return r.hash(); }
};
