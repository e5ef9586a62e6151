#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "motint/bigint.hpp"

namespace motint {

/// Univariate integer polynomial, ascending coefficients.
using IntegerPolynomial = std::vector<Integer>;

/// Dense polynomials over F_p with word-size coefficients in [0, p).
/// Ascending coefficients, no trailing zeros.
namespace fp {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a);
Poly reduce(const IntegerPolynomial& f, std::uint64_t p);
Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
/// Remainder of a modulo nonzero b.
Poly mod(const Poly& a, const Poly& b, std::uint64_t p);
/// Quotient of a by nonzero b (remainder discarded).
Poly div(const Poly& a, const Poly& b, std::uint64_t p);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b, std::uint64_t p);
Poly derivative(const Poly& a, std::uint64_t p);
/// base^e mod m.
Poly powmod(const Poly& base, const Integer& e, const Poly& m, std::uint64_t p);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);
int degree(const Poly& a);

}  // namespace fp

/// The field F_q, q = p^i, as F_p[X]/(modulus).
///
/// Elements are encoded as integers in [0, q): the residue c_0 + c_1 X + ...
/// maps to c_0 + c_1 p + c_2 p^2 + .... In particular the prime subfield F_p
/// is {0, ..., p-1} with its usual meaning.
class FiniteField {
 public:
  using Element = std::uint32_t;

  /// Largest q accepted by construct().
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 24;

  /// F_{p^i} with the lexicographically first monic irreducible modulus of
  /// degree i (for i = 1 this is X). Deterministic.
  static FiniteField construct(std::uint64_t p, unsigned degree);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return degree_; }
  std::uint64_t order() const { return q_; }
  /// Monic, degree() + 1 coefficients.
  const fp::Poly& modulus() const { return modulus_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const { return sub(0, a); }
  Element mul(Element a, Element b) const;
  Element pow(Element a, std::uint64_t e) const;
  Element inv(Element a) const;
  /// Image of an integer under Z -> F_p -> F_q.
  Element from_integer(const Integer& n) const;

  fp::Poly to_poly(Element a) const;
  Element from_poly(const fp::Poly& a) const;
  std::string to_string(Element a) const;

 private:
  FiniteField(std::uint64_t p, unsigned degree, fp::Poly modulus);
  Element add_slow(Element a, Element b) const;
  Element mul_slow(Element a, Element b) const;

  std::uint64_t p_;
  unsigned degree_;
  std::uint64_t q_;
  fp::Poly modulus_;
  // q x q lookup tables, present for small extension fields only.
  std::shared_ptr<const std::vector<Element>> add_table_;
  std::shared_ptr<const std::vector<Element>> mul_table_;
};

/// Whether monic f of degree >= 1 is irreducible over F_p (Rabin test).
bool is_irreducible(const fp::Poly& f, std::uint64_t p);

/// Number of distinct roots in F_{p^i} of f mod p, computed as
/// deg gcd(X^{p^i} - X, f mod p). Throws DomainError when f = 0 mod p.
std::uint64_t count_roots(const IntegerPolynomial& f, const FiniteField& field);

/// Class of the zero-dimensional scheme Spec F_p[X]/(f mod p), recorded by the
/// number of irreducible factors per degree.
struct ZeroDimClass {
  std::map<unsigned, unsigned> degree_counts;

  unsigned total_degree() const;
  /// Number of F_{p^i}-points: sum over d | i of d * count(d).
  std::uint64_t point_count(unsigned i) const;
  /// e.g. "{1: 2}".
  std::string to_string() const;
  friend bool operator==(const ZeroDimClass&, const ZeroDimClass&) = default;
};

/// Distinct-degree decomposition of f mod p. Throws DomainError when the
/// reduction is constant or not separable.
ZeroDimClass degree_multiset(const IntegerPolynomial& f, std::uint64_t p);

}  // namespace motint
