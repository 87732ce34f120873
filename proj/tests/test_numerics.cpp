#include <doctest.h>

#include <random>
#include <sstream>

#include "pthresh/errors.hpp"
#include "pthresh/rational.hpp"

using pthresh::Rational;

TEST_CASE("canonical form") {
  Rational r(6, -4);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(10, 5).str() == "2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(mpz_class(r.raw().get_den()) == 2);
  CHECK_THROWS_AS(Rational(1, 0), pthresh::DomainError);
}

TEST_CASE("parse and print") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK(Rational::parse("4/8").str() == "1/2");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse(""));
  std::ostringstream os;
  os << Rational(-5, 3);
  CHECK(os.str() == "-5/3");
}

TEST_CASE("decimal rendering") {
  CHECK(Rational(43, 223).decimal(3) == "0.193");
  CHECK(Rational(48, 71).decimal(3) == "0.676");
  CHECK(Rational(7, 16).decimal(3) == "0.438");
  CHECK(Rational(-1, 3).decimal(2) == "-0.33");
  CHECK(Rational(2).decimal(0) == "2");
}

TEST_CASE("rounding helpers") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).abs() == Rational(7, 2));
  CHECK(Rational(3, 5).inverse() == Rational(5, 3));
  CHECK_THROWS_AS(Rational(0).inverse(), pthresh::DomainError);
  CHECK(Rational(9, 3).to_long() == 3);
  CHECK_THROWS_AS(Rational(1, 2).to_long(), pthresh::DomainError);
  CHECK(Rational(4).is_integer());
  CHECK_FALSE(Rational(1, 4).is_integer());
}

TEST_CASE("ordering and hashing") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(pthresh::min(Rational(2), Rational(1, 2)) == Rational(1, 2));
  CHECK(pthresh::max(Rational(2), Rational(1, 2)) == 2);
  CHECK(Rational(2, 4).hash() == Rational(1, 2).hash());
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), pthresh::DomainError);
}

TEST_CASE("harmonic numbers") {
  CHECK(pthresh::harmonic(1) == 1);
  CHECK(pthresh::harmonic(2) == Rational(3, 2));
  CHECK(pthresh::harmonic(5) == Rational(137, 60));
  CHECK_THROWS_AS(pthresh::harmonic(0), pthresh::DomainError);

  // Oracle: common denominator n! and integer numerator.
  for (int n = 1; n <= 20; ++n) {
    mpz_class fact = 1, num = 0;
    for (int i = 1; i <= n; ++i) fact *= i;
    for (int i = 1; i <= n; ++i) num += fact / i;
    CHECK(pthresh::harmonic(n) == Rational(mpq_class(num, fact)));
  }
  for (int n = 1; n <= 200; ++n)
    CHECK(pthresh::harmonic(n + 1) - pthresh::harmonic(n) == Rational(1, n + 1));
}

TEST_CASE("field identities on random rationals") {
  std::mt19937_64 rng(0x5eed01);
  std::uniform_int_distribution<long> num(-1'000'000'000L, 1'000'000'000L), den(1, 1'000'000'000L);
  for (int i = 0; i < 2000; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * (Rational(1) / a) == 1);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    // Canonical: gcd(num, den) = 1 and den > 0.
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.raw().get_num_mpz_t(), a.raw().get_den_mpz_t());
    CHECK(g == 1);
    CHECK(sgn(a.raw().get_den()) > 0);
    CHECK(Rational::parse(a.str()) == a);
  }
}

TEST_CASE("no precision loss on large values") {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1'000'003, 999'983);
  Rational back = big;
  for (int i = 0; i < 40; ++i) back /= Rational(1'000'003, 999'983);
  CHECK(back == 1);
}
