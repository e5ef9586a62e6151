#include "motint/finite_field.hpp"

#include <sstream>
#include <utility>

#include "motint/errors.hpp"

namespace motint {

namespace fp {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

}  // namespace

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly reduce(const IntegerPolynomial& f, std::uint64_t p) {
  Poly r(f.size());
  const Integer mod(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer c;
    mpz_fdiv_r(c.get_mpz_t(), f[i].get_mpz_t(), mod.get_mpz_t());
    r[i] = c.get_ui();
  }
  trim(r);
  return r;
}

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = x >= p ? x - p : x;
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = x >= y ? x - y : x + p - y;
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DomainError("inverse of zero in F_p");
  // Fermat; p is prime everywhere this is used.
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

namespace {

void divmod(const Poly& a, const Poly& b, std::uint64_t p, Poly* quot, Poly& rem) {
  if (b.empty()) throw DomainError("polynomial division by zero over F_p");
  rem = a;
  const int db = degree(b);
  const std::uint64_t inv_lead = inverse(b.back(), p);
  if (quot) quot->assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, 0);
  for (int i = degree(rem); i >= db; --i) {
    const std::uint64_t c = mulmod(rem[static_cast<std::size_t>(i)], inv_lead, p);
    if (c == 0) continue;
    if (quot) (*quot)[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& x = rem[static_cast<std::size_t>(i - db + j)];
      const std::uint64_t t = mulmod(c, b[static_cast<std::size_t>(j)], p);
      x = x >= t ? x - t : x + p - t;
    }
  }
  trim(rem);
  if (quot) trim(*quot);
}

}  // namespace

Poly mod(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r;
  divmod(a, b, p, nullptr, r);
  return r;
}

Poly div(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly q, r;
  divmod(a, b, p, &q, r);
  return q;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const std::uint64_t inv = inverse(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

Poly derivative(const Poly& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
  trim(r);
  return r;
}

Poly powmod(const Poly& base, const Integer& e, const Poly& m, std::uint64_t p) {
  Poly result = mod(Poly{1}, m, p);
  Poly b = mod(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t k = bits; k-- > 0;) {
    result = mod(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), k)) result = mod(mul(result, b, p), m, p);
  }
  return result;
}

}  // namespace fp

namespace {

// X^{p^k} mod f, by k successive p-th powerings.
fp::Poly frobenius_power_of_x(unsigned k, const fp::Poly& f, std::uint64_t p) {
  fp::Poly h = fp::mod(fp::Poly{0, 1}, f, p);
  const Integer pp(static_cast<unsigned long>(p));
  for (unsigned j = 0; j < k; ++j) h = fp::powmod(h, pp, f, p);
  return h;
}

}  // namespace

bool is_irreducible(const fp::Poly& f, std::uint64_t p) {
  const int n = fp::degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  const fp::Poly x{0, 1};
  for (int k = 1; 2 * k <= n; ++k) {
    fp::Poly h = fp::sub(frobenius_power_of_x(static_cast<unsigned>(k), f, p), x, p);
    if (fp::degree(fp::gcd(h, f, p)) > 0) return false;
  }
  return true;
}

FiniteField FiniteField::construct(std::uint64_t p, unsigned degree) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (degree < 1) throw DomainError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned k = 0; k < degree; ++k) {
    if (q > kMaxOrder / p) throw BudgetError("field order " + std::to_string(p) + "^" + std::to_string(degree) + " exceeds budget");
    q *= p;
  }
  // Monic candidates X^degree + sum c_j X^j, with code = sum c_j p^j counting upward.
  for (std::uint64_t code = 0; code < q; ++code) {
    fp::Poly f(degree + 1, 0);
    f[degree] = 1;
    std::uint64_t c = code;
    for (unsigned j = 0; j < degree; ++j) {
      f[j] = c % p;
      c /= p;
    }
    if (is_irreducible(f, p)) return FiniteField(p, degree, std::move(f));
  }
  throw InternalError("no irreducible polynomial found");
}

FiniteField::FiniteField(std::uint64_t p, unsigned degree, fp::Poly modulus)
    : p_(p), degree_(degree), q_(1), modulus_(std::move(modulus)) {
  for (unsigned k = 0; k < degree; ++k) q_ *= p;
  if (degree > 1 && q_ <= 1024) {
    std::vector<Element> add(q_ * q_), mul(q_ * q_);
    for (Element a = 0; a < q_; ++a) {
      for (Element b = 0; b < q_; ++b) {
        add[a * q_ + b] = add_slow(a, b);
        mul[a * q_ + b] = mul_slow(a, b);
      }
    }
    add_table_ = std::make_shared<const std::vector<Element>>(std::move(add));
    mul_table_ = std::make_shared<const std::vector<Element>>(std::move(mul));
  }
}

fp::Poly FiniteField::to_poly(Element a) const {
  fp::Poly r(degree_, 0);
  std::uint64_t c = a;
  for (unsigned j = 0; j < degree_; ++j) {
    r[j] = c % p_;
    c /= p_;
  }
  fp::trim(r);
  return r;
}

FiniteField::Element FiniteField::from_poly(const fp::Poly& a) const {
  fp::Poly r = fp::degree(a) >= static_cast<int>(degree_) ? fp::mod(a, modulus_, p_) : a;
  std::uint64_t code = 0;
  for (std::size_t j = r.size(); j-- > 0;) code = code * p_ + r[j];
  return static_cast<Element>(code);
}

FiniteField::Element FiniteField::add_slow(Element a, Element b) const {
  std::uint64_t code = 0, scale = 1, x = a, y = b;
  for (unsigned j = 0; j < degree_; ++j) {
    code += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return static_cast<Element>(code);
}

FiniteField::Element FiniteField::mul_slow(Element a, Element b) const {
  return from_poly(fp::mul(to_poly(a), to_poly(b), p_));
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  if (degree_ == 1) {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  if (add_table_) return (*add_table_)[a * q_ + b];
  return add_slow(a, b);
}

FiniteField::Element FiniteField::sub(Element a, Element b) const {
  if (degree_ == 1) return static_cast<Element>(a >= b ? a - b : a + p_ - b);
  std::uint64_t code = 0, scale = 1, x = a, y = b;
  for (unsigned j = 0; j < degree_; ++j) {
    code += ((x % p_ + p_ - y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return static_cast<Element>(code);
}

FiniteField::Element FiniteField::mul(Element a, Element b) const {
  if (degree_ == 1) return static_cast<Element>(std::uint64_t{a} * b % p_);
  if (mul_table_) return (*mul_table_)[a * q_ + b];
  return mul_slow(a, b);
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  Element r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw DomainError("inverse of zero in F_q");
  return pow(a, q_ - 2);
}

FiniteField::Element FiniteField::from_integer(const Integer& n) const {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p_);
  return static_cast<Element>(r.get_ui());
}

std::string FiniteField::to_string(Element a) const {
  fp::Poly c = to_poly(a);
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = c.size(); j-- > 0;) {
    if (c[j] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (j == 0 || c[j] != 1) os << c[j];
    if (j > 0) os << (c[j] != 1 ? "*" : "") << "X" << (j > 1 ? "^" + std::to_string(j) : "");
  }
  return os.str();
}

std::uint64_t count_roots(const IntegerPolynomial& f, const FiniteField& field) {
  const std::uint64_t p = field.characteristic();
  fp::Poly fbar = fp::reduce(f, p);
  if (fbar.empty()) throw DomainError("polynomial vanishes identically mod " + std::to_string(p));
  if (fp::degree(fbar) == 0) return 0;
  fp::Poly h = fp::sub(frobenius_power_of_x(field.degree(), fbar, p), fp::Poly{0, 1}, p);
  return static_cast<std::uint64_t>(fp::degree(fp::gcd(h, fbar, p)));
}

unsigned ZeroDimClass::total_degree() const {
  unsigned t = 0;
  for (auto [d, c] : degree_counts) t += d * c;
  return t;
}

std::uint64_t ZeroDimClass::point_count(unsigned i) const {
  std::uint64_t n = 0;
  for (auto [d, c] : degree_counts)
    if (i % d == 0) n += std::uint64_t{d} * c;
  return n;
}

std::string ZeroDimClass::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto [d, c] : degree_counts) {
    if (!first) os << ", ";
    first = false;
    os << d << ": " << c;
  }
  os << "}";
  return os.str();
}

ZeroDimClass degree_multiset(const IntegerPolynomial& f, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  fp::Poly rest = fp::reduce(f, p);
  if (fp::degree(rest) < 1) throw DomainError("reduction mod " + std::to_string(p) + " is constant");
  if (fp::degree(fp::gcd(rest, fp::derivative(rest, p), p)) > 0)
    throw DomainError("reduction mod " + std::to_string(p) + " is not separable");
  ZeroDimClass cls;
  rest = fp::gcd(rest, {}, p);  // monic
  const fp::Poly x{0, 1};
  fp::Poly h = x;  // X^{p^j} mod rest
  const Integer pp(static_cast<unsigned long>(p));
  for (unsigned j = 1; fp::degree(rest) > 0; ++j) {
    if (2 * j > static_cast<unsigned>(fp::degree(rest))) {
      cls.degree_counts[static_cast<unsigned>(fp::degree(rest))] += 1;
      break;
    }
    h = fp::powmod(h, pp, rest, p);
    fp::Poly g = fp::gcd(fp::sub(h, x, p), rest, p);
    if (fp::degree(g) > 0) {
      cls.degree_counts[j] = static_cast<unsigned>(fp::degree(g)) / j;
      rest = fp::div(rest, g, p);
      h = fp::mod(h, rest, p);
    }
  }
  return cls;
}

}  // namespace motint
