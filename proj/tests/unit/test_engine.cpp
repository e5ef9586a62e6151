#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "motint/errors.hpp"
#include "motint/engine.hpp"
#include "motint/forms_io.hpp"

using namespace motint;

namespace {

RationalFunction ratio(std::vector<long> num, std::vector<long> den) {
  auto poly = [](const std::vector<long>& c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return LPolynomial(std::move(v));
  };
  return RationalFunction::normalized(poly(num), poly(den));
}

const RationalFunction kV2 = ratio({0, 1}, {1, 1});
const RationalFunction L_inv = RationalFunction::lefschetz_power(-1);

RationalFunction value(const char* text, unsigned n) { return integrate_product(parse_forms(text, n)).value; }

}  // namespace

TEST_CASE("known integrals") {
  CHECK(value("x1-x2", 2) == kV2);
  CHECK(value("x1", 1) == kV2);
  CHECK(value("x1, x2", 2) == kV2 * kV2);
  // (1 - L^-1)(1 - L^-1 + L^-2) / ((1 + L^-1)(1 - L^-5)), written without inverse powers.
  const RationalFunction one(1);
  const auto v3 = (one - L_inv) * (one - L_inv + L_inv * L_inv) /
                  ((one + L_inv) * (one - RationalFunction::lefschetz_power(-5)));
  CHECK(value("x1-x2, x1-x3, x2-x3", 3) == v3);
  CHECK(value("x1-x2, x1-x3, x2-x3", 3).evaluate(Rational(2)) == Rational(8, 31));
  CHECK(integrate_product(FormProduct{3, {}}).value == RationalFunction(1));
}

TEST_CASE("conditioned and scale terms") {
  const auto v2 = parse_forms("x1-x2", 2);
  CHECK(conditioned_term(v2, {0}) == RationalFunction::lefschetz_power(-2) * kV2);
  CHECK(conditioned_term(v2, {}) == ratio({0, -1, 1}, {0, 0, 1}));
  CHECK(uniformizer_scale_term(parse_forms("x1", 1)) == RationalFunction::lefschetz_power(-2) * kV2);
  CHECK(uniformizer_scale_term(FormProduct{1, {}}) == L_inv);
  CHECK(uniformizer_scale_term(v2) == RationalFunction::lefschetz_power(-3) * kV2);

  // Full-rank input: conditioned_term(S) equals the scale term.
  const auto xy = parse_forms("x1, x1+x2", 2);
  CHECK(conditioned_term(xy, {0, 1}) == uniformizer_scale_term(xy));

  // The three symmetric middle terms of the Vandermonde recursion.
  const auto v3 = parse_forms("x1-x2, x1-x3, x2-x3", 3);
  const auto L = RationalFunction(LPolynomial::lefschetz());
  CHECK(conditioned_term(v3, {0}) == L * (L - 1) * RationalFunction::lefschetz_power(-4) * kV2);
}

TEST_CASE("the recursion identity holds at every node") {
  clear_engine_cache();
  value("x1-x2, x1-x3, x2-x3, x1-x2", 3);
  value("x1+x2, x1-x3, x2+x3", 3);
  const auto nodes = memo_nodes();
  CHECK(nodes.size() > 3);
  for (const auto& node : nodes) CHECK(node.residual.is_zero());
}

TEST_CASE("separation of variables") {
  const auto blocks = separate_variables(parse_forms("x1, x2", 2));
  CHECK(blocks.blocks.size() == 2);
  CHECK(separate_variables(parse_forms("x1-x2, x1-x3, x2-x3", 3)).blocks.size() == 1);
  const auto free = separate_variables(parse_forms("x1-x2", 3));
  CHECK(free.blocks.size() == 1);
  CHECK(free.free_variables == std::vector<unsigned>{2});
  CHECK(value("x1-x2", 3) == kV2);
  CHECK(value("x1-x2, x3+x4, x3-x4", 4) == kV2 * value("x1+x2, x1-x2", 2));
}

TEST_CASE("change of variables") {
  const auto fp = parse_forms("x1+x2, x1-2*x2", 2);
  // x = M y with M the inverse of [[1, 1], [1, -2]].
  const std::vector<std::vector<Rational>> M = {{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(-1, 3)}};
  const auto cv = change_of_variables(fp, M);
  CHECK(cv.determinant == Rational(-1, 3));
  CHECK(cv.bad_primes == PrimeSet{3});
  CHECK(cv.result.canonical().key() == parse_forms("x1, x2", 2).canonical().key());

  const std::vector<std::vector<Rational>> id = {{1, 0}, {0, 1}};
  CHECK(change_of_variables(fp, id).result.key() == fp.key());
  CHECK(change_of_variables(fp, id).bad_primes.empty());
  CHECK_THROWS_AS(change_of_variables(fp, {{1, 2}, {2, 4}}), DomainError);

  const std::vector<std::vector<Rational>> swap = {{0, 1}, {1, 0}};
  const auto swapped = change_of_variables(fp, swap);
  CHECK(integrate_product(swapped.result).value == integrate_product(fp).value);
}

TEST_CASE("validity classification") {
  const auto v = classify_validity(parse_forms("x1-x2, x2-x3", 3));
  CHECK(v.mixed_char == MixedVerdict::AllPrimes);
  CHECK(v.admits_mixed_char(2));
  CHECK(v.admits_equal_char(2));

  const auto odd = classify_validity(parse_forms("x1+x2", 2));
  CHECK(odd.mixed_char == MixedVerdict::OddPrimes);
  CHECK_FALSE(odd.admits_mixed_char(2));
  CHECK(odd.admits_mixed_char(3));

  const auto c = classify_validity(parse_forms("x1+x2, x1-2*x2", 2));
  CHECK(c.mixed_char == MixedVerdict::OutsideBadPrimes);
  CHECK(c.mixed_bad_primes.count(3));
  CHECK_FALSE(c.admits_mixed_char(3));
  CHECK(c.admits_mixed_char(5));
  CHECK(c.equal_char);

  CHECK(classify_validity(parse_forms("x1+x2+x3", 3)).mixed_char == MixedVerdict::OutsideBadPrimes);
}

TEST_CASE("general-forms recursion") {
  const auto fp = parse_forms("x1+x2, x1-2*x2", 2);
  const auto r = integrate_leuven(fp);
  CHECK(r.value == kV2 * kV2);
  CHECK(r.validity.mixed_bad_primes.count(3));
  // Constraints containing every form: L^{-n-s} J(S, {}).
  const auto constrained = integrate_leuven(fp, fp.forms);
  CHECK(constrained.value == RationalFunction::lefschetz_power(-4) * r.value);
  CHECK(integrate_leuven(FormProduct{2, {}}).value == RationalFunction(1));
}

TEST_CASE("random inputs: both recursions, permutations, probability bound") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coeff(-1, 1);
  std::uniform_int_distribution<unsigned> count(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    FormProduct fp{3, {}};
    for (unsigned i = count(rng); i > 0; --i) {
      LinearForm f(3);
      do {
        for (auto& x : f) x = coeff(rng);
      } while (support_size(f) == 0 || support_size(f) > 2);
      fp.forms.push_back(f);
    }
    const auto a = integrate_product(fp);
    CHECK(a.value == integrate_leuven(fp).value);

    std::vector<unsigned> perm(3);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    FormProduct permuted{3, {}};
    for (const auto& f : fp.forms) {
      LinearForm g(3);
      for (unsigned v = 0; v < 3; ++v) g[perm[v]] = f[v];
      permuted.forms.push_back(g);
    }
    CHECK(integrate_product(permuted).value == a.value);

    for (std::uint64_t q : {2, 3, 5, 7, 9}) {
      const auto x = a.value.evaluate(Rational(Integer(static_cast<unsigned long>(q))));
      CHECK(x > 0);
      CHECK(x <= 1);
    }
  }
}

TEST_CASE("prime residue characteristic reads forms mod p") {
  IntegrationOptions o;
  o.residue_characteristic = 3;
  const auto fp = parse_forms("x1+x2, x1-2*x2", 2);
  CHECK(integrate_product(fp, o).value == integrate_product(parse_forms("x1+x2, x1+x2", 2)).value);
}

TEST_CASE("one-variable integrals") {
  const auto lin = integrate_onevar({3, 2}, 5);
  CHECK(lin.as_rational_function() == std::optional<RationalFunction>(kV2));
  const auto x2 = integrate_onevar({1, 0, 1}, 3);
  CHECK(x2.evaluate(1) == 1);
  CHECK(x2.evaluate(2) == Rational(4, 5));
  CHECK_FALSE(x2.as_rational_function().has_value());
  CHECK(integrate_onevar({1, 0, 1}, 5).evaluate(1) == Rational(2, 3));
  CHECK(integrate_onevar({1, 0, 1}, 7).evaluate(2) == Rational(24, 25));
  CHECK_THROWS_AS(integrate_onevar({1, 0, 1}, 2), DomainError);
  CHECK_THROWS_AS(integrate_onevar({0, 5}, 5), DomainError);

  CHECK(newton_measure({1, 0, 1}, 5, 3).evaluate(1) == Rational(2, 125));
  CHECK(newton_measure({1, 0, 1}, 5, 0).evaluate(1) == 1);
  CHECK(newton_measure({1, 0, 1}, 3, 2).evaluate(1) == 0);
}
