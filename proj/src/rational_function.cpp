#include "motint/rational_function.hpp"

#include <utility>

#include "motint/errors.hpp"

namespace motint {

RationalFunction::RationalFunction(LPolynomial p) : num_(std::move(p)), den_(1) {
  *this = normalized(std::move(num_), LPolynomial(1));
}

RationalFunction RationalFunction::normalized(LPolynomial num, LPolynomial den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  RationalFunction r;
  if (num.is_zero()) return r;
  LPolynomial g = gcd(num, den);
  if (g.degree() > 0) {
    num = divexact(num, g);
    den = divexact(den, g);
  }
  Integer c = num.content();
  const Integer cd = den.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
  if (den.leading() < 0) c = -c;
  if (c != 1) {
    num = num.divexact(c);
    den = den.divexact(c);
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

RationalFunction RationalFunction::lefschetz_power(long k) {
  if (k >= 0) return RationalFunction(LPolynomial::monomial(1, static_cast<unsigned>(k)));
  RationalFunction r;
  r.num_ = LPolynomial(1);
  r.den_ = LPolynomial::monomial(1, static_cast<unsigned>(-k));
  return r;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) return *this = normalized(num_ + o.num_, den_);
  return *this = normalized(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  return *this = normalized(num_ * o.num_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DomainError("division by the zero rational function");
  if (is_zero()) return *this;
  return *this = normalized(num_ * o.den_, den_ * o.num_);
}

Rational RationalFunction::evaluate(const Rational& q) const {
  const Rational d = den_.evaluate(q);
  if (d == 0) throw DomainError("pole at L = " + q.get_str());
  Rational r = num_.evaluate(q) / d;
  r.canonicalize();
  return r;
}

namespace {

std::string grouped(const LPolynomial& p) {
  unsigned terms = 0;
  for (const auto& c : p.coeffs()) terms += c != 0;
  return terms > 1 ? "(" + p.to_string() + ")" : p.to_string();
}

}  // namespace

std::string RationalFunction::to_string() const {
  if (den_ == LPolynomial(1)) return num_.to_string();
  return grouped(num_) + "/" + grouped(den_);
}

}  // namespace motint
