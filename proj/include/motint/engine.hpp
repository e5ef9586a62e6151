#pragma once

// Motivic integrals of |l_1 ... l_s| over arcs of A^n for integer linear forms
// l_i, as rational functions in L.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motint/bigint.hpp"
#include "motint/finite_field.hpp"
#include "motint/linear_form.hpp"
#include "motint/rational_function.hpp"

namespace motint {

/// The integrand Q = prod forms on A^n. Forms form a multiset.
struct FormProduct {
  unsigned n = 0;
  std::vector<LinearForm> forms;

  /// Throws DomainError on a zero form or a length mismatch.
  void validate() const;
  /// Forms sign-normalized and sorted.
  FormProduct canonical() const;
  /// Text key of canonical(), e.g. "3:1,-1,0;0,1,-1".
  std::string key() const;
  std::string to_string() const;
};

enum class MixedVerdict {
  /// Every form is x_i - x_j.
  AllPrimes,
  /// Every form has at most two nonzero coefficients, all +1 or -1.
  OddPrimes,
  /// Only certified for residue characteristics outside bad_primes.
  OutsideBadPrimes,
};

std::string to_string(MixedVerdict v);

struct FormRationale {
  std::string form;
  /// "difference", "two-term-unit", or "general".
  std::string rule;
};

struct ValidityReport {
  /// The recursion hypotheses hold over F_q[[t]] for arbitrary forms.
  bool equal_char = true;
  /// Residue characteristics at which the generic stratum classes may differ
  /// from the ones over F_p (equal and mixed characteristic alike).
  PrimeSet stratum_bad_primes;
  MixedVerdict mixed_char = MixedVerdict::OutsideBadPrimes;
  /// For OutsideBadPrimes: primes met in the basis changes of the
  /// general-forms recursion (a sufficient condition only).
  PrimeSet mixed_bad_primes;
  std::vector<FormRationale> rationale;

  bool admits_equal_char(std::uint64_t p) const;
  bool admits_mixed_char(std::uint64_t p) const;
};

/// Validity from the coefficient shapes alone; runs the general-forms
/// recursion to collect bad primes when the shapes do not suffice.
ValidityReport classify_validity(const FormProduct& fp);

/// One memo node of the main recursion together with its self-check.
struct TraceNode {
  std::string key;
  unsigned n = 0;
  unsigned forms = 0;
  RationalFunction value;
  /// (1 - [H_S] L^{-|S|-n}) I(S) - sum_{T strict subset} [H_T] L^{-|T|-n} I(T).
  RationalFunction residual;
};

struct MotivicResult {
  RationalFunction value;
  ValidityReport validity;
  /// "mainmc", "leuven" or "product-split".
  std::string method;
  std::vector<TraceNode> trace;
};

struct IntegrationOptions {
  /// 0: strata over Q (p large). Otherwise the residue field has this prime
  /// characteristic and forms are read mod p; the result is the integral over
  /// F_p^i[[t]].
  std::uint64_t residue_characteristic = 0;
  bool collect_trace = false;
  /// Skip classify_validity (its general-forms pass can dominate the cost).
  bool skip_validity = false;
};

/// Main recursion:
///   (1 - [H_S] L^{-|S|-n}) I(S) = sum_{T strict subset of S} [H_T] L^{-|T|-n} I(T).
MotivicResult integrate_product(const FormProduct& fp, const IntegrationOptions& options = {});

/// [H_T] L^{-|T|-n} I(T): the integral over ord l_i > 0 (i in T),
/// ord l_i = 0 (i not in T). `subset` lists indices into fp.forms.
RationalFunction conditioned_term(const FormProduct& fp, const std::vector<unsigned>& subset,
                                  const IntegrationOptions& options = {});

/// L^{-s-n} I(S): the integral over ord x_i > 0 for all i.
RationalFunction uniformizer_scale_term(const FormProduct& fp, const IntegrationOptions& options = {});

struct VariableBlocks {
  /// Each block uses only its own variables, renumbered from x1.
  std::vector<FormProduct> blocks;
  /// Original variable indices (0-based) of each block.
  std::vector<std::vector<unsigned>> variables;
  /// Variables not used by any form.
  std::vector<unsigned> free_variables;
};

/// Connected components of the variable/form incidence graph.
VariableBlocks separate_variables(const FormProduct& fp);

struct ChangeOfVariables {
  FormProduct result;
  Rational determinant;
  /// Primes of det M and of the denominators cleared from the new forms.
  PrimeSet bad_primes;
};

/// Substitutes x = M y. A form with coefficient vector c becomes M^T c,
/// scaled to integers. Throws DomainError when M is singular or not n x n.
ChangeOfVariables change_of_variables(const FormProduct& fp, const std::vector<std::vector<Rational>>& M);

/// General-forms recursion for J(S, M) = integral over {ord m > 0, m in M} of
/// |prod_{l in S} l|, certified outside the returned bad primes.
MotivicResult integrate_leuven(const FormProduct& fp, const std::vector<LinearForm>& constraints = {});

/// Integral of |f| over W(F_q) or F_q[[t]] for a univariate integer f with
/// separable non-constant reduction mod p: 1 - [C]/(L + 1).
struct OneVarResult {
  IntegerPolynomial f;
  std::uint64_t p = 0;
  ZeroDimClass cls;

  /// Value at q = p^i: 1 - #C(F_q)/(q + 1).
  Rational evaluate(unsigned i) const;
  /// The class as a function of L when every factor is linear.
  std::optional<RationalFunction> as_rational_function() const;
  std::string formula() const;
};

OneVarResult integrate_onevar(const IntegerPolynomial& f, std::uint64_t p);

/// mu(ord f >= n) = [C] L^{-n} for n >= 1, and 1 for n = 0.
struct NewtonMeasure {
  ZeroDimClass cls;
  unsigned level = 0;
  std::uint64_t p = 0;

  Rational evaluate(unsigned i) const;
  std::string formula() const;
};

NewtonMeasure newton_measure(const IntegerPolynomial& f, std::uint64_t p, unsigned level);

/// Every memo node computed so far by integrate_product.
std::vector<TraceNode> memo_nodes();
void clear_engine_cache();

}  // namespace motint
