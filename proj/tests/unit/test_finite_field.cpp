#include <doctest.h>

#include "motint/errors.hpp"
#include "motint/finite_field.hpp"

using namespace motint;

namespace {

// Irreducibility of a degree <= 3 polynomial is equivalent to having no root.
bool has_root(const fp::Poly& f, std::uint64_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

std::uint64_t brute_roots(const IntegerPolynomial& f, const FiniteField& F) {
  std::uint64_t n = 0;
  for (std::uint64_t x = 0; x < F.order(); ++x) {
    auto acc = F.zero();
    for (std::size_t i = f.size(); i-- > 0;)
      acc = F.add(F.mul(acc, static_cast<FiniteField::Element>(x)), F.from_integer(f[i]));
    n += F.is_zero(acc);
  }
  return n;
}

}  // namespace

TEST_CASE("small fields satisfy the field axioms") {
  for (auto [p, d] : {std::pair{2ull, 1u}, {2, 2}, {2, 3}, {3, 2}, {5, 1}, {7, 2}}) {
    const auto F = FiniteField::construct(p, d);
    CAPTURE(p);
    CAPTURE(d);
    CHECK(F.modulus().size() == d + 1);
    if (d <= 3 && d > 1) CHECK_FALSE(has_root(F.modulus(), p));
    const auto q = F.order();
    for (std::uint64_t a = 0; a < q; ++a) {
      const auto x = static_cast<FiniteField::Element>(a);
      CHECK(F.add(x, F.neg(x)) == 0);
      if (x) CHECK(F.mul(x, F.inv(x)) == 1);
      CHECK(F.pow(x, q) == x);
      for (std::uint64_t b = 0; b < q; ++b) {
        const auto y = static_cast<FiniteField::Element>(b);
        CHECK(F.mul(x, y) == F.mul(y, x));
        CHECK(F.mul(x, F.add(y, 1)) == F.add(F.mul(x, y), x));
      }
    }
  }
}

TEST_CASE("lex-first modulus is deterministic") {
  CHECK(FiniteField::construct(2, 2).modulus() == fp::Poly{1, 1, 1});
  CHECK(FiniteField::construct(3, 2).modulus() == FiniteField::construct(3, 2).modulus());
  CHECK(is_irreducible(fp::Poly{1, 0, 1}, 3));
  CHECK_FALSE(is_irreducible(fp::Poly{1, 0, 1}, 5));
}

TEST_CASE("root counts match enumeration") {
  const std::vector<IntegerPolynomial> polys = {{1, 0, 1}, {-2, 0, 1}, {0, -1, 0, 1}, {1, 1, 1}, {3, 0, 0, 1}};
  for (auto [p, d] : {std::pair{2ull, 1u}, {2, 2}, {3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}}) {
    const auto F = FiniteField::construct(p, d);
    for (const auto& f : polys) {
      bool zero = true;
      for (const auto& c : f) zero &= c % static_cast<unsigned long>(p) == 0;
      if (zero) continue;
      CHECK(count_roots(f, F) == brute_roots(f, F));
    }
  }
}

TEST_CASE("degree multisets") {
  CHECK(degree_multiset({1, 0, 1}, 3).degree_counts == std::map<unsigned, unsigned>{{2, 1}});
  CHECK(degree_multiset({1, 0, 1}, 5).degree_counts == std::map<unsigned, unsigned>{{1, 2}});
  const auto c = degree_multiset({1, 0, 1}, 3);
  CHECK(c.point_count(1) == 0);
  CHECK(c.point_count(2) == 2);
  CHECK_THROWS_AS(degree_multiset({1, 0, 1}, 2), DomainError);
  CHECK_THROWS_AS(degree_multiset({3}, 3), DomainError);
}
