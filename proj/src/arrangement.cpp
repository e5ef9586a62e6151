#include "motint/arrangement.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <type_traits>

#include "motint/errors.hpp"
#include "motint/finite_field.hpp"
#include "motint/parallel.hpp"

namespace motint {

namespace {

// Q with bookkeeping: every value found to be nonzero contributes its primes.
struct GenericField {
  using E = Rational;
  PrimeSet* bad;

  E from(const Integer& c) const { return E(c); }
  E zero() const { return 0; }
  E one() const { return 1; }
  bool nonzero(const E& x) const {
    if (x == 0) return false;
    add_prime_factors(x, *bad);
    return true;
  }
  E add(const E& a, const E& b) const { return a + b; }
  E sub(const E& a, const E& b) const { return a - b; }
  E mul(const E& a, const E& b) const { return a * b; }
  E inv(const E& a) const { return 1 / a; }
  void key(std::ostream& os, const E& x) const { os << x.get_str(); }
  std::uint64_t tag() const { return 0; }
};

struct PrimeField {
  using E = std::uint64_t;
  std::uint64_t p;

  E from(const Integer& c) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
    return r.get_ui();
  }
  E zero() const { return 0; }
  E one() const { return 1 % p; }
  bool nonzero(const E& x) const { return x != 0; }
  E add(const E& a, const E& b) const { return sub(a, p - b == p ? 0 : p - b); }
  E sub(const E& a, const E& b) const { return a >= b ? a - b : a + (p - b); }
  E mul(const E& a, const E& b) const {
    return static_cast<E>(static_cast<unsigned __int128>(a) * b % p);
  }
  E inv(const E& a) const { return fp::inverse(a, p); }
  void key(std::ostream& os, const E& x) const { os << x; }
  std::uint64_t tag() const { return p; }
};

template <class F>
using Row = std::vector<typename F::E>;

// Restricts `forms` to the common kernel of `eq` in R^n. Returns the kernel
// dimension; forms are rewritten in coordinates on the kernel basis.
template <class F>
unsigned restrict_to_kernel(const F& field, unsigned n, std::vector<Row<F>> eq, std::vector<Row<F>>& forms) {
  std::vector<int> pivot_of_row(eq.size(), -1);
  std::vector<bool> is_pivot_col(n, false);
  for (;;) {
    // First nonzero entry in row-major order among rows without a pivot.
    int pr = -1, pc = -1;
    for (std::size_t r = 0; r < eq.size() && pr < 0; ++r) {
      if (pivot_of_row[r] >= 0) continue;
      for (unsigned c = 0; c < n; ++c)
        if (field.nonzero(eq[r][c])) {
          pr = static_cast<int>(r);
          pc = static_cast<int>(c);
          break;
        }
    }
    if (pr < 0) break;
    const auto inv = field.inv(eq[pr][pc]);
    for (auto& x : eq[pr]) x = field.mul(x, inv);
    for (std::size_t r = 0; r < eq.size(); ++r) {
      if (static_cast<int>(r) == pr) continue;
      const auto factor = eq[r][pc];
      if (factor == field.zero()) continue;
      for (unsigned c = 0; c < n; ++c) eq[r][c] = field.sub(eq[r][c], field.mul(factor, eq[pr][c]));
    }
    pivot_of_row[pr] = pc;
    is_pivot_col[pc] = true;
  }

  std::vector<Row<F>> basis;
  for (unsigned f = 0; f < n; ++f) {
    if (is_pivot_col[f]) continue;
    Row<F> v(n, field.zero());
    v[f] = field.one();
    for (std::size_t r = 0; r < eq.size(); ++r)
      if (pivot_of_row[r] >= 0) v[pivot_of_row[r]] = field.sub(field.zero(), eq[r][f]);
    basis.push_back(std::move(v));
  }

  for (auto& form : forms) {
    Row<F> restricted;
    for (const auto& v : basis) {
      auto acc = field.zero();
      for (unsigned i = 0; i < n; ++i) acc = field.add(acc, field.mul(form[i], v[i]));
      restricted.push_back(acc);
    }
    form = std::move(restricted);
  }
  return static_cast<unsigned>(basis.size());
}

struct Memo {
  std::shared_mutex mutex;
  std::map<std::string, StratumClass> table;
};

Memo& memo() {
  static Memo m;
  return m;
}

LPolynomial lefschetz_pow(unsigned d) { return LPolynomial::monomial(1, d); }

// Class of { t in A^dim : f(t) != 0 for all f in forms }.
template <class F>
StratumClass complement_class(const F& field, unsigned dim, std::vector<Row<F>> forms) {
  StratumClass out;
  F local = field;
  if constexpr (std::is_same_v<F, GenericField>) local.bad = &out.bad_primes;

  // Scale each form to first nonzero coefficient 1; a zero form empties the stratum.
  for (auto& f : forms) {
    int lead = -1;
    for (unsigned i = 0; i < dim; ++i)
      if (local.nonzero(f[i])) {
        lead = static_cast<int>(i);
        break;
      }
    if (lead < 0) return out;
    const auto inv = local.inv(f[lead]);
    for (auto& x : f) x = local.mul(x, inv);
  }
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());

  if (forms.empty()) {
    out.value = lefschetz_pow(dim);
    return out;
  }
  if (forms.size() == 1) {
    out.value = lefschetz_pow(dim - 1) * (LPolynomial::lefschetz() - LPolynomial(1));
    return out;
  }

  std::ostringstream key_stream;
  key_stream << local.tag() << '|' << dim;
  for (const auto& f : forms) {
    key_stream << '|';
    for (const auto& x : f) {
      local.key(key_stream, x);
      key_stream << ',';
    }
  }
  const std::string key = key_stream.str();
  {
    std::shared_lock lock(memo().mutex);
    auto it = memo().table.find(key);
    if (it != memo().table.end()) {
      out.value = it->second.value;
      out.bad_primes.insert(it->second.bad_primes.begin(), it->second.bad_primes.end());
      return out;
    }
  }

  // Deletion-restriction on the last hyperplane H = ker h:
  // [complement of A in V] = [complement of A \ h in V] - [complement of (A \ h)|_H in H].
  Row<F> h = forms.back();
  forms.pop_back();
  std::vector<Row<F>> on_h = forms;
  const unsigned hdim = restrict_to_kernel(local, dim, {h}, on_h);
  StratumClass deleted = complement_class(local, dim, forms);
  StratumClass restricted = complement_class(local, hdim, std::move(on_h));
  out.value = deleted.value - restricted.value;
  out.bad_primes.insert(deleted.bad_primes.begin(), deleted.bad_primes.end());
  out.bad_primes.insert(restricted.bad_primes.begin(), restricted.bad_primes.end());

  std::unique_lock lock(memo().mutex);
  memo().table.try_emplace(key, out);
  return out;
}

void check_spec(const StratumSpec& spec) {
  for (const auto* list : {&spec.eq, &spec.neq})
    for (const auto& f : *list)
      if (f.size() != spec.n) throw DomainError("linear form length does not match the ambient dimension");
  if (spec.p != 0 && !is_prime(spec.p)) throw DomainError("field mode needs a prime, got " + std::to_string(spec.p));
}

template <class F>
std::vector<Row<F>> convert(const F& field, const std::vector<LinearForm>& forms) {
  std::vector<Row<F>> out;
  for (const auto& f : forms) {
    Row<F> r;
    for (const auto& c : f) r.push_back(field.from(c));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

RestrictedStratum kernel_restrict(const StratumSpec& spec) {
  check_spec(spec);
  RestrictedStratum out;
  if (spec.p == 0) {
    GenericField field{&out.bad_primes};
    auto forms = convert(field, spec.neq);
    out.dim = restrict_to_kernel(field, spec.n, convert(field, spec.eq), forms);
    for (const auto& f : forms) {
      Integer den = 1;
      for (const auto& x : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
      LinearForm g;
      Integer g_content = 0;
      for (const auto& x : f) {
        Rational scaled = x * den;
        g.push_back(scaled.get_num());
        mpz_gcd(g_content.get_mpz_t(), g_content.get_mpz_t(), scaled.get_num_mpz_t());
      }
      if (g_content > 1)
        for (auto& c : g) c /= g_content;
      out.forms.push_back(std::move(g));
    }
  } else {
    PrimeField field{spec.p};
    auto forms = convert(field, spec.neq);
    out.dim = restrict_to_kernel(field, spec.n, convert(field, spec.eq), forms);
    for (const auto& f : forms) {
      LinearForm g;
      for (auto x : f) g.push_back(Integer(static_cast<unsigned long>(x)));
      out.forms.push_back(std::move(g));
    }
  }
  return out;
}

StratumClass stratum_class(const StratumSpec& spec) {
  check_spec(spec);
  if (spec.p == 0) {
    PrimeSet bad;
    GenericField field{&bad};
    auto forms = convert(field, spec.neq);
    const unsigned dim = restrict_to_kernel(field, spec.n, convert(field, spec.eq), forms);
    StratumClass out = complement_class(field, dim, std::move(forms));
    out.bad_primes.insert(bad.begin(), bad.end());
    return out;
  }
  PrimeField field{spec.p};
  auto forms = convert(field, spec.neq);
  const unsigned dim = restrict_to_kernel(field, spec.n, convert(field, spec.eq), forms);
  return complement_class(field, dim, std::move(forms));
}

std::uint64_t count_stratum_points(const StratumSpec& spec, std::uint64_t q) {
  check_spec(spec);
  std::uint64_t p;
  unsigned e;
  if (!split_prime_power(q, p, e)) throw DomainError(std::to_string(q) + " is not a prime power");
  const Integer total_big = ipow(Integer(static_cast<unsigned long>(q)), spec.n);
  if (total_big > kMaxStratumPoints)
    throw BudgetError("enumerating " + total_big.get_str() + " points exceeds the budget of " +
                      std::to_string(kMaxStratumPoints));
  const std::uint64_t total = total_big.get_ui();
  const FiniteField field = FiniteField::construct(p, e);
  const unsigned n = spec.n;

  auto to_field = [&](const std::vector<LinearForm>& forms) {
    std::vector<std::vector<FiniteField::Element>> out;
    for (const auto& f : forms) {
      std::vector<FiniteField::Element> r;
      for (const auto& c : f) r.push_back(field.from_integer(c));
      out.push_back(std::move(r));
    }
    return out;
  };
  const auto eq = to_field(spec.eq);
  const auto neq = to_field(spec.neq);

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<FiniteField::Element> x(n);
    std::uint64_t count = 0;
    auto value = [&](const std::vector<FiniteField::Element>& f) {
      FiniteField::Element acc = 0;
      for (unsigned i = 0; i < n; ++i)
        if (f[i] && x[i]) acc = field.add(acc, field.mul(f[i], x[i]));
      return acc;
    };
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::uint64_t r = idx;
      for (unsigned i = n; i-- > 0;) {
        x[i] = static_cast<FiniteField::Element>(r % q);
        r /= q;
      }
      bool ok = true;
      for (const auto& f : eq)
        if (value(f) != 0) {
          ok = false;
          break;
        }
      if (ok)
        for (const auto& f : neq)
          if (value(f) == 0) {
            ok = false;
            break;
          }
      count += ok;
    }
    return count;
  };
  return parallel_reduce<std::uint64_t>(total, 0, work, [](std::uint64_t a, std::uint64_t b) { return a + b; });
}

void clear_stratum_cache() {
  std::unique_lock lock(memo().mutex);
  memo().table.clear();
}

}  // namespace motint
