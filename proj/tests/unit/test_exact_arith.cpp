#include <doctest.h>

#include <random>

#include "motint/errors.hpp"
#include "motint/bigint.hpp"
#include "motint/lpoly.hpp"
#include "motint/rational_function.hpp"

using namespace motint;

namespace {

LPolynomial poly(std::vector<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return LPolynomial(std::move(v));
}

LPolynomial random_poly(std::mt19937_64& rng, unsigned max_degree) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::vector<Integer> c(deg(rng) + 1);
  for (auto& x : c) x = coeff(rng);
  return LPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("primes and prime powers") {
  CHECK(is_prime(std::uint64_t{2}));
  CHECK(is_prime(Integer(97)));
  CHECK_FALSE(is_prime(std::uint64_t{1}));
  CHECK_FALSE(is_prime(std::uint64_t{91}));
  CHECK(prime_factors(Integer(-360)) == PrimeSet{2, 3, 5});
  CHECK(prime_factors(Integer(1)).empty());
  std::uint64_t p;
  unsigned e;
  REQUIRE(split_prime_power(243, p, e));
  CHECK(p == 3);
  CHECK(e == 5);
  CHECK_FALSE(split_prime_power(12, p, e));
  CHECK_FALSE(split_prime_power(1, p, e));
}

TEST_CASE("fraction text") {
  CHECK(to_fraction_string(Rational(6, 4)) == "3/2");
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(to_fraction_string(Rational(-1, 3)) == "-1/3");
  CHECK(parse_fraction("-10/4") == Rational(-5, 2));
  CHECK(parse_fraction("7") == Rational(7));
  CHECK(rpow(Rational(2), -3) == Rational(1, 8));
}

TEST_CASE("polynomial arithmetic in L") {
  const LPolynomial L = LPolynomial::lefschetz();
  CHECK((L - 1) * (L + 1) == poly({-1, 0, 1}));
  CHECK(poly({0, 0, 0}).is_zero());
  CHECK(poly({2, 4, 6}).content() == 2);
  CHECK(gcd(poly({-1, 0, 1}), poly({1, 2, 1})) == poly({1, 1}));
  CHECK(divexact(poly({-1, 0, 1}), poly({-1, 1})) == poly({1, 1}));
  CHECK(poly({1, -3, 2}).evaluate(Rational(1, 2)) == 0);
}

TEST_CASE("rational functions are canonical") {
  const auto a = RationalFunction::normalized(poly({-1, 0, 1}), poly({-2, 0, 2}));
  CHECK(a == RationalFunction(poly({1})) / RationalFunction(2));
  CHECK(a.den().leading() > 0);
  const auto b = RationalFunction::normalized(poly({1}), poly({0, -1}));
  CHECK(b.den().leading() > 0);
  CHECK(RationalFunction::lefschetz_power(-2) * RationalFunction::lefschetz_power(2) == RationalFunction(1));
  CHECK_THROWS_AS(RationalFunction::normalized(poly({1}), poly({0})), DomainError);
}

TEST_CASE("field laws agree with evaluation at rational points") {
  std::mt19937_64 rng(7);
  const std::vector<Rational> points = {Rational(2), Rational(3), Rational(-5, 7), Rational(9, 4)};
  for (int trial = 0; trial < 200; ++trial) {
    auto n1 = random_poly(rng, 3), d1 = random_poly(rng, 3), n2 = random_poly(rng, 3), d2 = random_poly(rng, 3);
    if (d1.is_zero() || d2.is_zero()) continue;
    const auto f = RationalFunction::normalized(n1, d1), g = RationalFunction::normalized(n2, d2);
    for (const auto& x : points) {
      if (d1.evaluate(x) == 0 || d2.evaluate(x) == 0) continue;
      const Rational fx = n1.evaluate(x) / d1.evaluate(x), gx = n2.evaluate(x) / d2.evaluate(x);
      CHECK((f + g).evaluate(x) == fx + gx);
      CHECK((f - g).evaluate(x) == fx - gx);
      CHECK((f * g).evaluate(x) == fx * gx);
      if (gx != 0 && !g.is_zero()) {
        const auto q = f / g;
        if (q.den().evaluate(x) != 0) CHECK(q.evaluate(x) == fx / gx);
      }
    }
    CHECK(f + g == g + f);
    CHECK((f - f).is_zero());
  }
}
