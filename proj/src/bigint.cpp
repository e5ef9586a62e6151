#include "motint/bigint.hpp"

#include <limits>

#include "motint/errors.hpp"

namespace motint {

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

bool is_prime(std::uint64_t n) { return is_prime(Integer(static_cast<unsigned long>(n))); }

namespace {

Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](const Integer& v) {
      Integer r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, PrimeSet& out) {
  if (n < 2) return;
  for (unsigned long p = 2; p < 10000 && static_cast<unsigned long>(p) * p <= n; ++p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.insert(Integer(p));
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  if (n < 2) return;
  if (is_prime(n)) {
    out.insert(n);
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

PrimeSet prime_factors(const Integer& n) {
  PrimeSet out;
  factor_into(abs(n), out);
  return out;
}

void add_prime_factors(const Rational& x, PrimeSet& out) {
  factor_into(abs(x.get_num()), out);
  factor_into(x.get_den(), out);
}

bool split_prime_power(std::uint64_t q, std::uint64_t& p, unsigned& e) {
  if (q < 2) return false;
  std::uint64_t f = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      f = d;
      break;
    }
  }
  if (f == 0) f = q;
  e = 0;
  while (q % f == 0) {
    q /= f;
    ++e;
  }
  p = f;
  return q == 1;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational rpow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw DomainError("negative power of zero");
    Rational inv = 1 / base;
    return rpow(inv, -exp);
  }
  Rational r(ipow(base.get_num(), static_cast<unsigned long>(exp)),
             ipow(base.get_den(), static_cast<unsigned long>(exp)));
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& x) {
  Rational r = x;
  r.canonicalize();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_fraction(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0) throw DomainError("not a rational: '" + text + "'");
  r.canonicalize();
  return r;
}

std::int64_t to_int64(const Integer& n) {
  if (!n.fits_slong_p()) throw DomainError("integer does not fit 64 bits: " + n.get_str());
  return n.get_si();
}

}  // namespace motint
