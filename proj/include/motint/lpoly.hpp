#pragma once

#include <string>
#include <vector>

#include "motint/bigint.hpp"

namespace motint {

/// Dense univariate polynomial over the integers in the Lefschetz class L.
/// coeffs()[i] is the coefficient of L^i; trailing zeros are never stored, so
/// the zero polynomial has no coefficients.
class LPolynomial {
 public:
  LPolynomial() = default;
  explicit LPolynomial(std::vector<Integer> coeffs);
  LPolynomial(long constant);  // NOLINT(google-explicit-constructor)

  static LPolynomial monomial(const Integer& c, unsigned degree);
  /// The class L itself.
  static LPolynomial lefschetz() { return monomial(1, 1); }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Integer& leading() const;
  Integer coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

  /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
  Integer content() const;
  LPolynomial primitive_part() const;

  LPolynomial operator-() const;
  LPolynomial& operator+=(const LPolynomial& o);
  LPolynomial& operator-=(const LPolynomial& o);
  LPolynomial& operator*=(const LPolynomial& o);
  LPolynomial& operator*=(const Integer& c);
  friend LPolynomial operator+(LPolynomial a, const LPolynomial& b) { return a += b; }
  friend LPolynomial operator-(LPolynomial a, const LPolynomial& b) { return a -= b; }
  friend LPolynomial operator*(const LPolynomial& a, const LPolynomial& b);
  friend LPolynomial operator*(LPolynomial a, const Integer& c) { return a *= c; }
  friend bool operator==(const LPolynomial& a, const LPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Divides every coefficient by c; throws InternalError unless exact.
  LPolynomial divexact(const Integer& c) const;

  Rational evaluate(const Rational& q) const;

  /// e.g. "L^2 - 3*L + 2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Pseudo-remainder of a by b (b nonzero).
LPolynomial pseudo_remainder(const LPolynomial& a, const LPolynomial& b);
/// gcd in Z[L] with positive leading coefficient; gcd(0, 0) = 0.
LPolynomial gcd(const LPolynomial& a, const LPolynomial& b);
/// a / b in Z[L]; throws InternalError when b does not divide a.
LPolynomial divexact(const LPolynomial& a, const LPolynomial& b);

}  // namespace motint
