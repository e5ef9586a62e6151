#pragma once

#include <string>

#include "motint/lpoly.hpp"

namespace motint {

/// Element of Q(L) = Z(L), the value type of every motivic integral.
///
/// Always held in canonical form: num and den coprime over Q, the integer
/// content of num and den taken together is 1, and den has a positive leading
/// coefficient. Structural equality is therefore semantic equality.
class RationalFunction {
 public:
  /// The zero function.
  RationalFunction() : den_(1) {}
  RationalFunction(LPolynomial p);  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(LPolynomial(c)) {}  // NOLINT(google-explicit-constructor)

  /// Canonical representative of num/den. Throws DomainError when den is zero.
  static RationalFunction normalized(LPolynomial num, LPolynomial den);
  /// L^k for any integer k.
  static RationalFunction lefschetz_power(long k);

  const LPolynomial& num() const { return num_; }
  const LPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  /// Throws DomainError on division by zero.
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Exact value at L = q (the point-counting specialization). Throws
  /// DomainError at a pole.
  Rational evaluate(const Rational& q) const;

  /// "(L)/(L + 1)"-style rendering; polynomials print without a denominator.
  std::string to_string() const;

 private:
  LPolynomial num_;
  LPolynomial den_;
};

}  // namespace motint
