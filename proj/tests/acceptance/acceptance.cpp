// Acceptance checks, one PASS/FAIL line per criterion.
//
//   acceptance [--expect-fail N]...
//
// Exit status is 0 when the set of failing criteria equals the expected set.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support/witt_properties.hpp"
#include "motint/arrangement.hpp"
#include "motint/engine.hpp"
#include "motint/forms_io.hpp"
#include "motint/oracle.hpp"

using namespace motint;

namespace {

// Bracket width tolerance at depth k: at most q^{-k}.
constexpr unsigned kOracleDepth = 3;
// Randomized Witt cases per identity and per (p, k).
constexpr unsigned kWittCases = 500;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  std::vector<std::string> failures;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

Rational q_rational(std::uint64_t q) { return Rational(Integer(static_cast<unsigned long>(q))); }

RationalFunction L_power_ratio(std::vector<long> num, std::vector<long> den) {
  auto poly = [](const std::vector<long>& c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return LPolynomial(std::move(v));
  };
  return RationalFunction::normalized(poly(num), poly(den));
}

// (1 - L^-1)(1 - L^-1 + L^-2) / ((1 + L^-1)(1 - L^-5)), cleared of negative powers:
// L^3 (L^2 - L + 1) / ((L + 1)(L^4 + L^3 + L^2 + L + 1)).
RationalFunction expected_v3() { return L_power_ratio({0, 0, 0, 1, -1, 1}, {1, 2, 2, 2, 2, 1}); }

Outcome criterion1() {
  Outcome o;
  const auto v2 = integrate_product(parse_forms("x1-x2", 2)).value;
  const auto v3 = integrate_product(parse_forms("x1-x2, x1-x3, x2-x3", 3)).value;
  const auto xy = integrate_product(parse_forms("x1, x2", 2)).value;
  o.require(v2 == L_power_ratio({0, 1}, {1, 1}), "V2 = " + v2.to_string());
  o.require(v3 == expected_v3(), "V3 = " + v3.to_string());
  o.require(xy == L_power_ratio({0, 0, 1}, {1, 2, 1}), "{x1,x2} = " + xy.to_string());
  o.summary = "V2 = " + v2.to_string() + "; V3 = " + v3.to_string() + "; {x1,x2} = " + xy.to_string();
  return o;
}

Outcome criterion2() {
  Outcome o;
  struct Case {
    std::string neq;
    unsigned n;
    LPolynomial expected;
  };
  const LPolynomial L = LPolynomial::lefschetz();
  const std::vector<Case> cases = {
      {"", 1, L},
      {"x1-x2", 2, L * (L - 1)},
      {"x1-x2, x1-x3, x2-x3", 3, L * (L - 1) * (L - 2)},
  };
  for (const auto& c : cases) {
    StratumSpec spec{c.n, {}, parse_form_list(c.neq, c.n), 0};
    const auto cls = stratum_class(spec).value;
    o.require(cls == c.expected, "class of n=" + std::to_string(c.n) + " stratum is " + cls.to_string());
    for (std::uint64_t q : {2, 3, 5}) {
      const auto count = count_stratum_points(spec, q);
      o.require(cls.evaluate(q_rational(q)) == q_rational(count),
                "n=" + std::to_string(c.n) + " q=" + std::to_string(q) + ": count " + std::to_string(count));
    }
  }
  o.summary = "L, L(L-1), L(L-1)(L-2) match point counts at q = 2, 3, 5";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const std::vector<std::pair<std::string, unsigned>> inputs = {
      {"x1-x2", 2}, {"x1-x2, x1-x3, x2-x3", 3}, {"x1, x2", 2}};
  unsigned checks = 0;
  for (const auto& [text, n] : inputs) {
    const auto fp = parse_forms(text, n);
    const auto value = integrate_product(fp).value;
    for (std::uint64_t q : {2, 3, 4, 5}) {
      std::uint64_t p;
      unsigned i;
      split_prime_power(q, p, i);
      const Rational expected = value.evaluate(q_rational(q));
      const Rational tolerance = rpow(q_rational(q), -static_cast<long>(kOracleDepth));
      std::vector<std::pair<std::string, Bracket>> brackets;
      if (i == 1)
        brackets.emplace_back("Z_" + std::to_string(p), padic_bracket_zp(fp, p, kOracleDepth));
      else
        brackets.emplace_back("W(F_" + std::to_string(q) + ")", padic_bracket_wq(fp, p, i, kOracleDepth));
      brackets.emplace_back("F_" + std::to_string(q) + "[[t]]", equalchar_bracket(fp, q, kOracleDepth));
      for (const auto& [setting, b] : brackets) {
        ++checks;
        const std::string where = text + " over " + setting;
        o.require(b.contains(expected), where + ": " + to_fraction_string(expected) + " outside [" +
                                            to_fraction_string(b.lower) + ", " + to_fraction_string(b.upper) + "]");
        o.require(b.width() <= tolerance, where + ": width " + to_fraction_string(b.width()));
      }
    }
  }
  o.summary = std::to_string(checks) + " brackets at depth 3 contain the symbolic value, width <= q^-3";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto fp = parse_forms("x1+x2, x1-2*x2", 2);
  const auto r = integrate_product(fp);
  o.require(r.value == L_power_ratio({0, 0, 1}, {1, 2, 1}), "engine value " + r.value.to_string());
  o.require(!r.validity.admits_mixed_char(3), "validity admits p = 3");

  const Rational p3(11, 16), wrong(9, 16);
  const auto b3 = padic_bracket_zp(fp, 3, 4);
  o.require(b3.contains(p3) && !b3.contains(wrong), "Z_3 bracket [" + to_fraction_string(b3.lower) + ", " +
                                                        to_fraction_string(b3.upper) + "] vs 11/16, 9/16");
  const auto b5 = padic_bracket_zp(fp, 5, 4);
  o.require(b5.contains(Rational(25, 36)),
            "Z_5 bracket [" + to_fraction_string(b5.lower) + ", " + to_fraction_string(b5.upper) + "] vs 25/36");
  const auto be = equalchar_bracket(fp, 3, 4);
  o.require(be.contains(wrong), "F_3[[t]] bracket [" + to_fraction_string(be.lower) + ", " +
                                    to_fraction_string(be.upper) + "] does not contain 9/16");
  o.summary = "{x1+x2, x1-2x2}: value, p=3 exclusion, Z_3 and Z_5 brackets, F_3[[t]] bracket";
  return o;
}

Outcome criterion5() {
  Outcome o;
  // |aX + b| integrates to q/(q+1) whenever p does not divide a.
  const std::vector<IntegerPolynomial> linear = {{0, 1}, {1, 1}, {-2, 3}, {5, -7}};
  for (std::uint64_t q : {2, 3, 4, 5}) {
    std::uint64_t p;
    unsigned i;
    split_prime_power(q, p, i);
    for (const auto& f : linear) {
      if (f[1] % static_cast<unsigned long>(p) == 0) continue;
      const auto v = integrate_onevar(f, p).evaluate(i);
      o.require(v == Rational(Integer(static_cast<unsigned long>(q)), Integer(static_cast<unsigned long>(q + 1))),
                univariate_to_string(f) + " at q=" + std::to_string(q) + " gives " + to_fraction_string(v));
    }
  }
  const auto x2p1 = integrate_onevar({1, 0, 1}, 3);
  o.require(x2p1.evaluate(1) == 1, "X^2 + 1 at q=3 gives " + to_fraction_string(x2p1.evaluate(1)));
  o.require(x2p1.evaluate(2) == Rational(4, 5), "X^2 + 1 at q=9 gives " + to_fraction_string(x2p1.evaluate(2)));

  // ord f >= 1 on W_m: roots * q^(m-1) classes, for separable f mod p.
  const std::vector<std::pair<IntegerPolynomial, std::uint64_t>> newton = {
      {{1, 0, 1}, 5}, {{1, 0, 1}, 3}, {{-2, 0, 1}, 7}, {{0, -1, 0, 1}, 5}, {{1, 1}, 2}};
  for (const auto& [f, p] : newton) {
    const auto poly = univariate_polynomial(f);
    const auto roots = count_roots(f, FiniteField::construct(p, 1));
    for (unsigned m = 1; m <= 3; ++m) {
      const auto count = cylinder_count(poly, p, 1, m, 1);
      std::uint64_t expected = roots;
      for (unsigned j = 1; j < m; ++j) expected *= p;
      o.require(count == expected, univariate_to_string(f) + " p=" + std::to_string(p) + " m=" + std::to_string(m) +
                                       ": " + std::to_string(count) + " classes");
    }
  }
  o.summary = "linear forms give q/(q+1), X^2+1 gives 1 and 4/5, Newton counts roots*q^(m-1)";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  struct Setting {
    std::uint64_t p;
    unsigned k;
    unsigned field_degree;  // residue field F_{p^i} for the identities
    unsigned form_degree;   // residue field for the form-shift identity (q <= 9)
  };
  for (const Setting s : {Setting{2, 3, 2, 2}, Setting{3, 3, 2, 2}, Setting{5, 2, 2, 1}}) {
    const std::string tag = "(" + std::to_string(s.p) + "," + std::to_string(s.k) + ")";
    const auto ctx = WittContext::get(s.p, s.k);
    testing::FieldWitt W(ctx, FiniteField::construct(s.p, s.field_degree));
    testing::FieldWitt Wf(ctx, FiniteField::construct(s.p, s.form_degree));
    auto check = [&](unsigned bad, const std::string& what) {
      o.require(bad == 0, what + " " + tag + ": " + std::to_string(bad) + " failures");
    };
    check(testing::check_ring_axioms(W, rng, kWittCases), "ring axioms");
    check(testing::check_ghost_homomorphism(s.p, s.k, rng, kWittCases), "ghost homomorphism");
    check(testing::check_frobenius_verschiebung(W, rng, kWittCases), "VF = FV = p, a V(b) = V(F(a) b)");
    check(testing::check_teichmuller_decomposition(W, rng, kWittCases), "Teichmuller decomposition");
    check(testing::check_shifted_products(W, rng, kWittCases), "V^i a V^j b identity");
    check(testing::check_form_shift(Wf, rng, kWittCases), "form shift");
  }
  o.summary = "6 identities x 500 cases for (2,3), (3,3), (5,2)";
  return o;
}

Outcome criterion7() {
  Outcome o;
  unsigned inputs = 0;
  const std::vector<std::string> differences3 = {"x1-x2", "x1-x3", "x2-x3"};
  auto run = [&](unsigned n, const std::vector<std::string>& pool, unsigned max_size) {
    std::vector<unsigned> pick;
    auto rec = [&](auto&& self, unsigned start) -> void {
      if (!pick.empty()) {
        std::string text;
        for (unsigned i : pick) text += (text.empty() ? "" : ", ") + pool[i];
        const auto fp = parse_forms(text, n);
        const auto a = integrate_product(fp).value;
        const auto b = integrate_leuven(fp).value;
        ++inputs;
        o.require(a == b, text + ": " + a.to_string() + " vs " + b.to_string());
      }
      if (pick.size() == max_size) return;
      for (unsigned i = start; i < pool.size(); ++i) {
        pick.push_back(i);
        self(self, i);
        pick.pop_back();
      }
    };
    rec(rec, 0);
  };
  run(2, {"x1-x2"}, 4);
  run(3, differences3, 4);
  o.summary = std::to_string(inputs) + " multisets of x_i - x_j agree across both recursions";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto nodes = memo_nodes();
  for (const auto& node : nodes) o.require(node.residual.is_zero(), node.key + ": residual " + node.residual.to_string());
  o.require(!nodes.empty(), "no memo nodes recorded");
  o.summary = std::to_string(nodes.size()) + " memo nodes with zero residual";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_failures;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc) {
      expected_failures.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--expect-fail N]...\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"reference-value regression", criterion1},  {"arrangement classes", criterion2},
      {"oracle containment", criterion3},      {"counterexample reproduction", criterion4},
      {"one-variable suite", criterion5},      {"Witt property suite", criterion6},
      {"cross-method equivalence", criterion7}, {"recursion residuals", criterion8},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.failures.empty();
    if (!ok) failed.insert(id);
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (ok ? "PASS" : "FAIL") << "  " << id << ". " << criteria[i].first << " (" << secs << " s)";
    if (ok) line << ": " << o.summary;
    std::cout << line.str() << '\n';
    for (const auto& f : o.failures) std::cout << "        - " << f << '\n';
  }

  std::cout << failed.size() << " of " << criteria.size() << " criteria failed";
  if (!expected_failures.empty()) {
    std::cout << " (expected:";
    for (int e : expected_failures) std::cout << ' ' << e;
    std::cout << ')';
  }
  std::cout << std::endl;
  return failed == expected_failures ? 0 : 1;
}
