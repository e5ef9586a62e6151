#include "motint/lpoly.hpp"

#include <sstream>
#include <utility>

#include "motint/errors.hpp"

namespace motint {

LPolynomial::LPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

LPolynomial::LPolynomial(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

LPolynomial LPolynomial::monomial(const Integer& c, unsigned degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return LPolynomial(std::move(v));
}

void LPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& LPolynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer LPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LPolynomial LPolynomial::primitive_part() const {
  if (is_zero()) return {};
  return divexact(content());
}

LPolynomial LPolynomial::operator-() const {
  LPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LPolynomial& LPolynomial::operator+=(const LPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

LPolynomial& LPolynomial::operator-=(const LPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

LPolynomial operator*(const LPolynomial& a, const LPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LPolynomial(std::move(r));
}

LPolynomial& LPolynomial::operator*=(const LPolynomial& o) { return *this = *this * o; }

LPolynomial& LPolynomial::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

LPolynomial LPolynomial::divexact(const Integer& c) const {
  if (c == 0) throw DomainError("division of a polynomial by zero");
  LPolynomial r = *this;
  for (auto& x : r.coeffs_) {
    MOTINT_ASSERT(mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()), "inexact coefficient division");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

Rational LPolynomial::evaluate(const Rational& q) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

std::string LPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "L";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

LPolynomial pseudo_remainder(const LPolynomial& a, const LPolynomial& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
  LPolynomial r = a;
  const int db = b.degree();
  const Integer& lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    const unsigned shift = static_cast<unsigned>(r.degree() - db);
    LPolynomial t = LPolynomial::monomial(r.leading(), shift) * b;
    r *= lb;
    r -= t;
  }
  return r;
}

LPolynomial gcd(const LPolynomial& a, const LPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  Integer g;
  const Integer ca = a.content(), cb = b.content();
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  LPolynomial x = a.primitive_part(), y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    LPolynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  x = x.primitive_part() * g;
  return x.leading() < 0 ? -x : x;
}

LPolynomial divexact(const LPolynomial& a, const LPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return {};
  std::vector<Integer> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) MOTINT_ASSERT(false, "inexact polynomial division");
  std::vector<Integer> quot(static_cast<std::size_t>(da - db + 1));
  const Integer& lb = b.leading();
  for (int i = da; i >= db; --i) {
    Integer& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    MOTINT_ASSERT(mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()), "inexact polynomial division");
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    quot[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  for (const auto& c : rem) MOTINT_ASSERT(c == 0, "inexact polynomial division");
  return LPolynomial(std::move(quot));
}

}  // namespace motint
