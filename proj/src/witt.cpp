#include "motint/witt.hpp"

#include <map>
#include <mutex>

namespace motint {

MultiPoly WittContext::ghost_polynomial(std::uint64_t p, unsigned m, unsigned nvars, unsigned offset) {
  MultiPoly w(nvars);
  const Integer P(static_cast<unsigned long>(p));
  for (unsigned i = 0; i <= m; ++i) {
    MultiPoly::Monomial mono(nvars, 0);
    mono[offset + i] = static_cast<std::uint32_t>(ipow(P, m - i).get_ui());
    w.add_term(mono, ipow(P, i));
  }
  return w;
}

namespace {

// Solves w_m(Z_0..Z_m) = target_m for Z_m given Z_0..Z_{m-1}.
MultiPoly solve_ghost_step(std::uint64_t p, unsigned m, const MultiPoly& target, const std::vector<MultiPoly>& lower) {
  const Integer P(static_cast<unsigned long>(p));
  MultiPoly rest = target;
  for (unsigned i = 0; i < m; ++i) {
    const auto e = static_cast<unsigned>(ipow(P, m - i).get_ui());
    rest -= lower[i].pow(e) * ipow(P, i);
  }
  return rest.divexact(ipow(P, m));
}

}  // namespace

WittContext::WittContext(std::uint64_t p, unsigned length) : p_(p), k_(length) {
  if (!is_prime(p)) throw DomainError("Witt vectors need a prime p, got " + std::to_string(p));
  if (length < 1 || length > kMaxLength)
    throw BudgetError("Witt length must be in [1, " + std::to_string(kMaxLength) + "]");
  if (ipow(Integer(static_cast<unsigned long>(p)), length - 1) > kMaxTopDegree)
    throw BudgetError("Witt context (" + std::to_string(p) + ", " + std::to_string(length) +
                      ") exceeds the structure polynomial budget");
  const unsigned nv = 2 * length;
  for (unsigned m = 0; m < length; ++m) {
    MultiPoly wx = ghost_polynomial(p, m, nv, 0);
    MultiPoly wy = ghost_polynomial(p, m, nv, length);
    sums_.push_back(solve_ghost_step(p, m, wx + wy, sums_));
    products_.push_back(solve_ghost_step(p, m, wx * wy, products_));
  }
}

std::shared_ptr<const WittContext> WittContext::get(std::uint64_t p, unsigned length) {
  using Key = std::pair<std::uint64_t, unsigned>;
  struct Slot {
    std::once_flag once;
    std::shared_ptr<const WittContext> value;
  };
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<Slot>> cache;

  std::shared_ptr<Slot> slot;
  {
    std::lock_guard lock(mutex);
    auto& s = cache[{p, length}];
    if (!s) s = std::make_shared<Slot>();
    slot = s;
  }
  // call_once rethrows construction failures and leaves the flag unset.
  std::call_once(slot->once, [&] { slot->value = std::make_shared<const WittContext>(p, length); });
  return slot->value;
}

void WittContext::dump(std::ostream& os) const {
  auto write = [&](char tag, unsigned m, const MultiPoly& f) {
    for (const auto& [mono, c] : f.terms()) {
      os << tag << m << ":";
      for (auto e : mono) os << ' ' << e;
      os << " : " << c.get_str() << '\n';
    }
  };
  os << "# p=" << p_ << " k=" << k_ << " variables X0..X" << k_ - 1 << " Y0..Y" << k_ - 1 << '\n';
  for (unsigned m = 0; m < k_; ++m) write('S', m, sums_[m]);
  for (unsigned m = 0; m < k_; ++m) write('P', m, products_[m]);
}

std::vector<Integer> witt_coordinates_of_integer(const Integer& n, std::uint64_t p, unsigned length) {
  const Integer P(static_cast<unsigned long>(p));
  std::vector<Integer> a;
  for (unsigned m = 0; m < length; ++m) {
    Integer rest = n;
    for (unsigned i = 0; i < m; ++i) {
      Integer t;
      mpz_pow_ui(t.get_mpz_t(), a[i].get_mpz_t(), ipow(P, m - i).get_ui());
      rest -= ipow(P, i) * t;
    }
    const Integer pm = ipow(P, m);
    MOTINT_ASSERT(mpz_divisible_p(rest.get_mpz_t(), pm.get_mpz_t()), "inexact ghost inversion of an integer");
    Integer am;
    mpz_divexact(am.get_mpz_t(), rest.get_mpz_t(), pm.get_mpz_t());
    a.push_back(am);
  }
  return a;
}

std::vector<MultiPoly> universal_coordinate_polynomials(const MultiPoly& f, std::uint64_t p, unsigned depth) {
  const unsigned d = f.nvars();
  PolynomialRing ring(d * depth, p);
  WittArithmetic<PolynomialRing> W(WittContext::get(p, depth), ring);
  std::vector<WittVector<MultiPoly>> args;
  for (unsigned i = 0; i < d; ++i) {
    std::vector<MultiPoly> c;
    for (unsigned j = 0; j < depth; ++j) c.push_back(ring.variable(i * depth + j));
    args.push_back(W.make(std::move(c)));
  }
  return W.evaluate(f, args).coeffs;
}

}  // namespace motint
