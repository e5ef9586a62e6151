#include <doctest.h>

#include <cmath>

#include "motint/errors.hpp"
#include "motint/engine.hpp"
#include "motint/forms_io.hpp"
#include "motint/oracle.hpp"

using namespace motint;

namespace {

Rational at(const RationalFunction& f, std::uint64_t q) { return f.evaluate(Rational(Integer(static_cast<unsigned long>(q)))); }

}  // namespace

TEST_CASE("brackets for single forms") {
  const auto fp = parse_forms("x1-x2", 2);
  CHECK(padic_bracket_zp(fp, 3, 3).contains(Rational(3, 4)));
  CHECK(padic_bracket_wq(fp, 2, 2, 3).contains(Rational(4, 5)));
  CHECK(equalchar_bracket(fp, 2, 4).contains(Rational(2, 3)));
  CHECK(padic_bracket_wq(parse_forms("x1, x2", 2), 3, 1, 3).contains(Rational(9, 16)));
}

TEST_CASE("empty product has measure one") {
  const FormProduct empty{2, {}};
  for (const auto& b : {padic_bracket_zp(empty, 3, 2), padic_bracket_wq(empty, 2, 2, 2), equalchar_bracket(empty, 4, 2)}) {
    CHECK(b.lower == 1);
    CHECK(b.upper == 1);
  }
}

TEST_CASE("Witt enumeration at degree one equals the Z_p enumeration") {
  for (const char* text : {"x1-x2", "x1+x2, x1-2*x2", "x1, x1+x2"}) {
    const auto fp = parse_forms(text, 2);
    for (std::uint64_t p : {2, 3, 5}) CHECK(padic_bracket_wq(fp, p, 1, 3) == padic_bracket_zp(fp, p, 3));
  }
}

TEST_CASE("refinement and width") {
  const auto fp = parse_forms("x1+x2, x1-x2", 2);
  for (std::uint64_t p : {3, 5}) {
    const auto b2 = padic_bracket_zp(fp, p, 2), b3 = padic_bracket_zp(fp, p, 3);
    CHECK(b2.lower <= b3.lower);
    CHECK(b3.upper <= b2.upper);
    CHECK(b3.width() <= rpow(Rational(Integer(static_cast<unsigned long>(p))), -3));
    const auto e2 = equalchar_bracket(fp, p, 2), e3 = equalchar_bracket(fp, p, 3);
    CHECK(e2.lower <= e3.lower);
    CHECK(e3.upper <= e2.upper);
  }
}

TEST_CASE("symbolic values fall inside brackets where the report admits q") {
  for (const char* text : {"x1-x2, x2-x3", "x1+x2, x1-x3", "x1, x2-x3", "x1+x2+x3"}) {
    const auto fp = parse_forms(text, 3);
    const auto r = integrate_product(fp);
    for (std::uint64_t p : {2, 3, 5}) {
      if (r.validity.admits_mixed_char(p)) CHECK(padic_bracket_zp(fp, p, 2).contains(at(r.value, p)));
      if (r.validity.admits_equal_char(p)) CHECK(equalchar_bracket(fp, p, 2).contains(at(r.value, p)));
    }
    if (r.validity.admits_mixed_char(2)) CHECK(padic_bracket_wq(fp, 2, 2, 2).contains(at(r.value, 4)));
  }
}

TEST_CASE("mixed characteristic differs from the generic value at a bad prime") {
  const auto fp = parse_forms("x1+x2, x1-2*x2", 2);
  const auto b = padic_bracket_zp(fp, 3, 4);
  CHECK(b.contains(Rational(11, 16)));
  CHECK_FALSE(b.contains(Rational(9, 16)));
  IntegrationOptions o;
  o.residue_characteristic = 3;
  CHECK(equalchar_bracket(fp, 3, 4).contains(at(integrate_product(fp, o).value, 3)));
}

TEST_CASE("cylinder counts") {
  const auto X = univariate_polynomial({0, 1});
  for (std::uint64_t p : {2, 3}) CHECK(cylinder_count(X, p, 1, 2) == 1);
  CHECK(cylinder_count(X, 2, 2, 2) == 1);
  const auto f = univariate_polynomial({1, 0, 1});
  CHECK(cylinder_count(f, 5, 1, 2, 1) == 10);
  CHECK(cylinder_count(f, 5, 1, 2) == 2);
  CHECK(cylinder_count(f, 3, 1, 2) == 0);
  CHECK(cylinder_count(f, 3, 2, 2, 1) == 2 * 9);
  for (unsigned m = 1; m <= 3; ++m) CHECK(cylinder_count(f, 5, 1, m, 1) == 2 * static_cast<std::uint64_t>(std::pow(5, m - 1)));
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(padic_bracket_zp(parse_forms("x1, x2, x3, x4", 4), 7, 3), BudgetError);
}
