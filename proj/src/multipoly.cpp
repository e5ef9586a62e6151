#include "motint/multipoly.hpp"

#include <sstream>

namespace motint {

void MultiPoly::normalize_coeff(Integer& c) const {
  if (modulus_ != 0) mpz_fdiv_r_ui(c.get_mpz_t(), c.get_mpz_t(), modulus_);
}

MultiPoly MultiPoly::constant(unsigned nvars, const Integer& c, std::uint64_t modulus) {
  MultiPoly r(nvars, modulus);
  r.add_term(Monomial(nvars, 0), c);
  return r;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned var, std::uint64_t modulus) {
  if (var >= nvars) throw DomainError("variable index out of range");
  MultiPoly r(nvars, modulus);
  Monomial m(nvars, 0);
  m[var] = 1;
  r.add_term(m, 1);
  return r;
}

Integer MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Integer& c) {
  if (m.size() != nvars_) throw DomainError("monomial arity mismatch");
  Integer v = c;
  normalize_coeff(v);
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, v);
  if (!inserted) {
    it->second += v;
    normalize_coeff(it->second);
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_, modulus_);
  for (const auto& [m, c] : terms_) r.add_term(m, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ != nvars_ || o.modulus_ != modulus_) throw DomainError("polynomial ring mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.nvars_ != nvars_ || o.modulus_ != modulus_) throw DomainError("polynomial ring mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Integer& c) {
  MultiPoly r(nvars_, modulus_);
  for (const auto& [m, x] : terms_) r.add_term(m, x * c);
  return *this = std::move(r);
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_ || a.modulus_ != b.modulus_) throw DomainError("polynomial ring mismatch");
  MultiPoly r(a.nvars_, a.modulus_);
  MultiPoly::Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (unsigned v = 0; v < a.nvars_; ++v) m[v] = ma[v] + mb[v];
      r.add_term(m, ca * cb);
    }
    if (r.terms_.size() > MultiPoly::kMaxTerms)
      throw BudgetError("polynomial product exceeds " + std::to_string(MultiPoly::kMaxTerms) + " terms");
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(nvars_, 1, modulus_);
  MultiPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

MultiPoly MultiPoly::divexact(const Integer& c) const {
  if (modulus_ != 0) throw DomainError("exact division is only defined over Z");
  MultiPoly r(nvars_, 0);
  for (const auto& [m, x] : terms_) {
    MOTINT_ASSERT(mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()),
                  "inexact division of polynomial coefficient " + x.get_str() + " by " + c.get_str());
    Integer q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    r.terms_.emplace(m, q);
  }
  return r;
}

MultiPoly MultiPoly::reduced(std::uint64_t modulus) const {
  MultiPoly r(nvars_, modulus);
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::extended(unsigned nvars) const {
  if (nvars < nvars_) throw DomainError("cannot shrink a polynomial ring");
  MultiPoly r(nvars, modulus_);
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    mm.resize(nvars, 0);
    r.terms_.emplace(std::move(mm), c);
  }
  return r;
}

MultiPoly MultiPoly::renamed(const std::vector<unsigned>& map, unsigned nvars) const {
  if (map.size() != nvars_) throw DomainError("variable map arity mismatch");
  MultiPoly r(nvars, modulus_);
  for (const auto& [m, c] : terms_) {
    Monomial mm(nvars, 0);
    for (unsigned v = 0; v < nvars_; ++v) {
      if (m[v] == 0) continue;
      if (map[v] >= nvars) throw DomainError("variable map target out of range");
      mm[map[v]] += m[v];
    }
    r.add_term(mm, c);
  }
  return r;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (auto e : m) s += static_cast<int>(e);
    d = std::max(d, s);
  }
  return d;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest monomials first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = true;
    std::ostringstream mono;
    for (unsigned v = 0; v < nvars_; ++v) {
      if (m[v] == 0) continue;
      if (!constant) mono << "*";
      constant = false;
      mono << (v < names.size() ? names[v] : "x" + std::to_string(v));
      if (m[v] > 1) mono << "^" << m[v];
    }
    if (constant) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << mono.str();
    }
  }
  return os.str();
}

}  // namespace motint
