#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "motint/bigint.hpp"
#include "motint/errors.hpp"

namespace motint {

/// Sparse multivariate polynomial over Z (modulus 0) or over Z/m (modulus m,
/// coefficients kept in [0, m)). Zero coefficients are never stored.
class MultiPoly {
 public:
  using Monomial = std::vector<std::uint32_t>;
  using Terms = std::map<Monomial, Integer>;

  /// Multiplication results larger than this raise BudgetError.
  static constexpr std::size_t kMaxTerms = 2'000'000;

  explicit MultiPoly(unsigned nvars = 0, std::uint64_t modulus = 0) : nvars_(nvars), modulus_(modulus) {}
  static MultiPoly constant(unsigned nvars, const Integer& c, std::uint64_t modulus = 0);
  static MultiPoly variable(unsigned nvars, unsigned var, std::uint64_t modulus = 0);

  unsigned nvars() const { return nvars_; }
  std::uint64_t modulus() const { return modulus_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of a monomial (0 when absent).
  Integer coeff(const Monomial& m) const;
  /// Adds c * m.
  void add_term(const Monomial& m, const Integer& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Integer& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Integer& c) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.modulus_ == b.modulus_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned e) const;
  /// Divides all coefficients by c over Z; throws InternalError unless exact.
  MultiPoly divexact(const Integer& c) const;
  /// Image in (Z/m)[vars].
  MultiPoly reduced(std::uint64_t modulus) const;
  /// Same polynomial viewed in a ring with more variables (new ones appended).
  MultiPoly extended(unsigned nvars) const;
  /// Substitutes variable i -> variable map[i] in a ring with `nvars` variables.
  MultiPoly renamed(const std::vector<unsigned>& map, unsigned nvars) const;
  /// Total degree; -1 for zero.
  int total_degree() const;

  /// Evaluates with ring arithmetic; values.size() must equal nvars().
  template <class Ring>
  typename Ring::Element evaluate(const Ring& ring, std::span<const typename Ring::Element> values) const;

  /// Human-readable, variables named by `names` (defaults to x0, x1, ...).
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void normalize_coeff(Integer& c) const;

  unsigned nvars_;
  std::uint64_t modulus_;
  Terms terms_;
};

/// Raises a ring element to a nonnegative power by square-and-multiply.
template <class Ring>
typename Ring::Element ring_pow(const Ring& ring, typename Ring::Element base, std::uint64_t e) {
  auto r = ring.one();
  while (e) {
    if (e & 1) r = ring.mul(r, base);
    e >>= 1;
    if (e) base = ring.mul(base, base);
  }
  return r;
}

template <class Ring>
typename Ring::Element MultiPoly::evaluate(const Ring& ring,
                                           std::span<const typename Ring::Element> values) const {
  if (values.size() != nvars_) throw DomainError("wrong number of values for polynomial evaluation");
  auto acc = ring.zero();
  for (const auto& [mono, c] : terms_) {
    auto term = ring.from_integer(c);
    for (unsigned v = 0; v < nvars_; ++v)
      if (mono[v]) term = ring.mul(term, ring_pow(ring, values[v], mono[v]));
    acc = ring.add(acc, term);
  }
  return acc;
}

/// The integers as a coefficient ring.
struct IntegerRing {
  using Element = Integer;
  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element from_integer(const Integer& n) const { return n; }
  bool is_zero(const Element& a) const { return a == 0; }
  std::uint64_t characteristic() const { return 0; }
};

/// Polynomials in a fixed number of variables over Z or Z/m as a coefficient ring.
class PolynomialRing {
 public:
  using Element = MultiPoly;
  PolynomialRing(unsigned nvars, std::uint64_t modulus) : nvars_(nvars), modulus_(modulus) {}
  Element zero() const { return MultiPoly(nvars_, modulus_); }
  Element one() const { return MultiPoly::constant(nvars_, 1, modulus_); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element from_integer(const Integer& n) const { return MultiPoly::constant(nvars_, n, modulus_); }
  Element variable(unsigned v) const { return MultiPoly::variable(nvars_, v, modulus_); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  std::uint64_t characteristic() const { return modulus_; }
  unsigned nvars() const { return nvars_; }

 private:
  unsigned nvars_;
  std::uint64_t modulus_;
};

}  // namespace motint
