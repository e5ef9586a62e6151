#include "motint/engine.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <sstream>

#include "motint/arrangement.hpp"
#include "motint/errors.hpp"

namespace motint {

namespace {

constexpr unsigned kMaxForms = 20;

RationalFunction lpow(long k) { return RationalFunction::lefschetz_power(k); }

}  // namespace

// ---------------------------------------------------------------------------
// FormProduct

void FormProduct::validate() const {
  for (const auto& f : forms) {
    if (f.size() != n) throw DomainError("linear form length does not match the ambient dimension");
    if (is_zero_form(f)) throw DomainError("zero linear form in product");
  }
}

FormProduct FormProduct::canonical() const {
  FormProduct out{n, {}};
  for (const auto& f : forms) out.forms.push_back(sign_normalized(f));
  std::sort(out.forms.begin(), out.forms.end());
  return out;
}

std::string FormProduct::key() const {
  const FormProduct c = canonical();
  std::ostringstream os;
  os << n << ':';
  for (std::size_t i = 0; i < c.forms.size(); ++i) {
    if (i) os << ';';
    for (std::size_t j = 0; j < c.forms[i].size(); ++j) os << (j ? "," : "") << c.forms[i][j].get_str();
  }
  return os.str();
}

std::string FormProduct::to_string() const {
  if (forms.empty()) return "1";
  std::string s;
  for (const auto& f : forms) s += (s.empty() ? "(" : " * (") + form_to_string(f) + ")";
  return s;
}

// ---------------------------------------------------------------------------
// Validity

std::string to_string(MixedVerdict v) {
  switch (v) {
    case MixedVerdict::AllPrimes: return "all_primes";
    case MixedVerdict::OddPrimes: return "odd_primes";
    case MixedVerdict::OutsideBadPrimes: return "outside_bad_primes";
  }
  return "unknown";
}

bool ValidityReport::admits_equal_char(std::uint64_t p) const {
  return !stratum_bad_primes.count(Integer(static_cast<unsigned long>(p)));
}

bool ValidityReport::admits_mixed_char(std::uint64_t p) const {
  const Integer P(static_cast<unsigned long>(p));
  if (stratum_bad_primes.count(P)) return false;
  switch (mixed_char) {
    case MixedVerdict::AllPrimes: return true;
    case MixedVerdict::OddPrimes: return p != 2;
    case MixedVerdict::OutsideBadPrimes: return !mixed_bad_primes.count(P);
  }
  return false;
}

namespace {

bool is_difference(const LinearForm& f) {
  if (support_size(f) != 2) return false;
  int plus = 0, minus = 0;
  for (const auto& c : f) {
    plus += (c == 1);
    minus += (c == -1);
  }
  return plus == 1 && minus == 1;
}

bool is_two_term_unit(const LinearForm& f) {
  if (support_size(f) > 2) return false;
  for (const auto& c : f)
    if (c != 0 && c != 1 && c != -1) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Separation of variables

VariableBlocks separate_variables(const FormProduct& fp) {
  fp.validate();
  std::vector<unsigned> parent(fp.n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](unsigned v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> used(fp.n, false);
  for (const auto& f : fp.forms) {
    int first = -1;
    for (unsigned v = 0; v < fp.n; ++v) {
      if (f[v] == 0) continue;
      used[v] = true;
      if (first < 0)
        first = static_cast<int>(v);
      else
        parent[find(v)] = find(static_cast<unsigned>(first));
    }
  }
  VariableBlocks out;
  std::map<unsigned, std::size_t> block_of_root;
  for (unsigned v = 0; v < fp.n; ++v) {
    if (!used[v]) {
      out.free_variables.push_back(v);
      continue;
    }
    auto [it, inserted] = block_of_root.try_emplace(find(v), out.variables.size());
    if (inserted) out.variables.emplace_back();
    out.variables[it->second].push_back(v);
  }
  out.blocks.resize(out.variables.size());
  for (std::size_t b = 0; b < out.variables.size(); ++b) out.blocks[b].n = static_cast<unsigned>(out.variables[b].size());
  for (const auto& f : fp.forms) {
    unsigned v0 = 0;
    while (f[v0] == 0) ++v0;
    const std::size_t b = block_of_root.at(find(v0));
    LinearForm g;
    for (unsigned v : out.variables[b]) g.push_back(f[v]);
    out.blocks[b].forms.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Main recursion

namespace {

struct MemoEntry {
  TraceNode node;
  PrimeSet bad_primes;
};

struct MainMemo {
  std::shared_mutex mutex;
  std::map<std::string, MemoEntry> table;
};

MainMemo& main_memo() {
  static MainMemo m;
  return m;
}

struct Valued {
  RationalFunction value;
  PrimeSet bad_primes;
};

struct RecursionContext {
  std::uint64_t p = 0;
  std::vector<std::string>* visited = nullptr;
};

// Forms read in F_p[[t]]: reduced mod p and scaled so the first nonzero
// coefficient is 1 (a unit rescaling). nullopt when some form vanishes mod p.
std::optional<FormProduct> reduce_mod_p(const FormProduct& fp, std::uint64_t p) {
  FormProduct out{fp.n, {}};
  for (const auto& f : fp.forms) {
    std::vector<std::uint64_t> r;
    for (const auto& c : f) {
      Integer x;
      mpz_fdiv_r_ui(x.get_mpz_t(), c.get_mpz_t(), p);
      r.push_back(x.get_ui());
    }
    auto lead = std::find_if(r.begin(), r.end(), [](std::uint64_t x) { return x != 0; });
    if (lead == r.end()) return std::nullopt;
    const std::uint64_t inv = fp::inverse(*lead, p);
    LinearForm g;
    for (auto x : r) g.push_back(Integer(static_cast<unsigned long>(static_cast<unsigned __int128>(x) * inv % p)));
    out.forms.push_back(std::move(g));
  }
  return out;
}

StratumClass stratum(const FormProduct& fp, std::uint64_t mask, std::uint64_t p) {
  StratumSpec spec{fp.n, {}, {}, p};
  for (std::size_t i = 0; i < fp.forms.size(); ++i) (mask >> i & 1 ? spec.eq : spec.neq).push_back(fp.forms[i]);
  return stratum_class(spec);
}

FormProduct subproduct(const FormProduct& fp, std::uint64_t mask) {
  FormProduct out{fp.n, {}};
  for (std::size_t i = 0; i < fp.forms.size(); ++i)
    if (mask >> i & 1) out.forms.push_back(fp.forms[i]);
  return out;
}

Valued integrate_main(const FormProduct& input, RecursionContext& ctx);

// I(S) for a canonical, connected product with no dead variables.
Valued integrate_block(const FormProduct& fp, RecursionContext& ctx) {
  const std::string key = std::to_string(ctx.p) + "|" + fp.key();
  if (ctx.visited) ctx.visited->push_back(key);
  {
    std::shared_lock lock(main_memo().mutex);
    auto it = main_memo().table.find(key);
    if (it != main_memo().table.end()) return {it->second.node.value, it->second.bad_primes};
  }
  const std::size_t s = fp.forms.size();
  if (s > kMaxForms) throw BudgetError("more than " + std::to_string(kMaxForms) + " forms");
  const long n = fp.n;
  const std::uint64_t full = (std::uint64_t{1} << s) - 1;

  PrimeSet bad;
  RationalFunction rhs;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    StratumClass h = stratum(fp, mask, ctx.p);
    bad.insert(h.bad_primes.begin(), h.bad_primes.end());
    if (h.value.is_zero()) continue;
    const long t = std::popcount(mask);
    Valued sub = integrate_main(subproduct(fp, mask), ctx);
    bad.insert(sub.bad_primes.begin(), sub.bad_primes.end());
    rhs += RationalFunction(h.value) * lpow(-t - n) * sub.value;
  }
  StratumClass hs = stratum(fp, full, ctx.p);
  bad.insert(hs.bad_primes.begin(), hs.bad_primes.end());
  const RationalFunction factor = RationalFunction(1) - RationalFunction(hs.value) * lpow(-static_cast<long>(s) - n);
  MOTINT_ASSERT(!factor.is_zero(), "1 - [H_S] L^{-|S|-n} vanished");
  const RationalFunction value = rhs / factor;

  MemoEntry entry;
  entry.node = TraceNode{key, fp.n, static_cast<unsigned>(s), value, factor * value - rhs};
  entry.bad_primes = bad;
  std::unique_lock lock(main_memo().mutex);
  main_memo().table.try_emplace(key, entry);
  return {value, bad};
}

Valued integrate_main(const FormProduct& input, RecursionContext& ctx) {
  if (input.forms.empty()) return {RationalFunction(1), {}};
  FormProduct fp = input;
  if (ctx.p != 0) {
    auto reduced = reduce_mod_p(input, ctx.p);
    if (!reduced) return {RationalFunction(0), {}};
    fp = *reduced;
  }
  VariableBlocks blocks = separate_variables(fp);
  Valued out{RationalFunction(1), {}};
  for (const auto& b : blocks.blocks) {
    Valued v = integrate_block(b.canonical(), ctx);
    out.value *= v.value;
    out.bad_primes.insert(v.bad_primes.begin(), v.bad_primes.end());
  }
  return out;
}

std::vector<TraceNode> collect_trace(const std::vector<std::string>& keys) {
  std::vector<TraceNode> out;
  std::set<std::string> seen;
  std::shared_lock lock(main_memo().mutex);
  for (const auto& k : keys) {
    if (!seen.insert(k).second) continue;
    auto it = main_memo().table.find(k);
    if (it != main_memo().table.end()) out.push_back(it->second.node);
  }
  return out;
}

PrimeSet leuven_bad_primes(const FormProduct& fp);

}  // namespace

ValidityReport classify_validity(const FormProduct& fp) {
  fp.validate();
  ValidityReport r;
  bool all_difference = true, all_unit = true;
  for (const auto& f : fp.forms) {
    FormRationale fr{form_to_string(f), "general"};
    if (is_difference(f))
      fr.rule = "difference";
    else if (is_two_term_unit(f))
      fr.rule = "two-term-unit";
    all_difference &= fr.rule == "difference";
    all_unit &= fr.rule != "general";
    r.rationale.push_back(std::move(fr));
  }
  RecursionContext ctx;
  r.stratum_bad_primes = integrate_main(fp, ctx).bad_primes;
  if (all_difference) {
    r.mixed_char = MixedVerdict::AllPrimes;
  } else if (all_unit) {
    r.mixed_char = MixedVerdict::OddPrimes;
  } else {
    r.mixed_char = MixedVerdict::OutsideBadPrimes;
    r.mixed_bad_primes = leuven_bad_primes(fp);
  }
  return r;
}

MotivicResult integrate_product(const FormProduct& fp, const IntegrationOptions& options) {
  fp.validate();
  if (options.residue_characteristic != 0 && !is_prime(options.residue_characteristic))
    throw DomainError("residue characteristic must be prime");
  std::vector<std::string> visited;
  RecursionContext ctx{options.residue_characteristic, options.collect_trace ? &visited : nullptr};
  MotivicResult out;
  out.value = integrate_main(fp, ctx).value;
  out.method = separate_variables(fp).blocks.size() > 1 ? "product-split" : "mainmc";
  if (!options.skip_validity) out.validity = classify_validity(fp);
  if (options.collect_trace) out.trace = collect_trace(visited);
  return out;
}

RationalFunction conditioned_term(const FormProduct& fp, const std::vector<unsigned>& subset,
                                  const IntegrationOptions& options) {
  fp.validate();
  std::uint64_t mask = 0;
  for (unsigned i : subset) {
    if (i >= fp.forms.size()) throw DomainError("subset index out of range");
    mask |= std::uint64_t{1} << i;
  }
  StratumClass h = stratum(fp, mask, options.residue_characteristic);
  RecursionContext ctx{options.residue_characteristic, nullptr};
  const long t = std::popcount(mask);
  return RationalFunction(h.value) * lpow(-t - static_cast<long>(fp.n)) *
         integrate_main(subproduct(fp, mask), ctx).value;
}

RationalFunction uniformizer_scale_term(const FormProduct& fp, const IntegrationOptions& options) {
  fp.validate();
  RecursionContext ctx{options.residue_characteristic, nullptr};
  return lpow(-static_cast<long>(fp.forms.size() + fp.n)) * integrate_main(fp, ctx).value;
}

std::vector<TraceNode> memo_nodes() {
  std::vector<TraceNode> out;
  std::shared_lock lock(main_memo().mutex);
  for (const auto& [k, e] : main_memo().table) out.push_back(e.node);
  return out;
}

// ---------------------------------------------------------------------------
// Change of variables

namespace {

// Determinant by elimination over Q.
Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a[r][c] == 0) ++r;
    if (r == n) return 0;
    if (r != c) {
      std::swap(a[r], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

}  // namespace

ChangeOfVariables change_of_variables(const FormProduct& fp, const std::vector<std::vector<Rational>>& M) {
  fp.validate();
  if (M.size() != fp.n) throw DomainError("change of variables matrix must be n x n");
  for (const auto& row : M)
    if (row.size() != fp.n) throw DomainError("change of variables matrix must be n x n");
  ChangeOfVariables out;
  out.determinant = determinant(M);
  if (out.determinant == 0) throw DomainError("change of variables matrix is singular");
  add_prime_factors(out.determinant, out.bad_primes);
  out.result.n = fp.n;
  for (const auto& c : fp.forms) {
    std::vector<Rational> img(fp.n, Rational(0));
    for (unsigned j = 0; j < fp.n; ++j)
      for (unsigned i = 0; i < fp.n; ++i) img[j] += M[i][j] * c[i];
    Integer den = 1;
    for (const auto& x : img) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    add_prime_factors(Rational(den), out.bad_primes);
    LinearForm g;
    for (const auto& x : img) g.push_back(Rational(x * den).get_num());
    out.result.forms.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// General-forms recursion

namespace {

// Primitive, sign-normalized; the removed content's primes are recorded.
LinearForm primitive_form(const LinearForm& f, PrimeSet& bad) {
  Integer g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  LinearForm out = f;
  if (g > 1) {
    for (const auto& q : prime_factors(g)) bad.insert(q);
    for (auto& c : out) c /= g;
  }
  return sign_normalized(std::move(out));
}

// Rank over Q by incremental elimination in the given order. Pivot primes are
// recorded: outside them the rank mod p is the same and the rows kept form a
// basis over Z_(p) of their Q-span intersected with Z_(p)^n.
unsigned rank_with_primes(const std::vector<LinearForm>& rows, PrimeSet& bad) {
  std::vector<std::pair<std::size_t, std::vector<Rational>>> echelon;  // (pivot column, row)
  for (const auto& f : rows) {
    std::vector<Rational> v(f.begin(), f.end());
    for (const auto& [pc, e] : echelon) {
      if (v[pc] == 0) continue;
      const Rational factor = v[pc] / e[pc];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= factor * e[j];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end()) continue;
    add_prime_factors(*it, bad);
    echelon.emplace_back(static_cast<std::size_t>(it - v.begin()), std::move(v));
  }
  return static_cast<unsigned>(echelon.size());
}

struct LeuvenMemo {
  std::shared_mutex mutex;
  std::map<std::string, Valued> table;
};

LeuvenMemo& leuven_memo() {
  static LeuvenMemo m;
  return m;
}

std::string forms_key(const std::vector<LinearForm>& forms) {
  std::ostringstream os;
  for (const auto& f : forms) {
    for (const auto& c : f) os << c.get_str() << ',';
    os << ';';
  }
  return os.str();
}

// J(S, M): S canonical multiset, M sorted set of primitive forms.
Valued leuven(unsigned n, const std::vector<LinearForm>& S, const std::vector<LinearForm>& M) {
  const std::string key = std::to_string(n) + "|" + forms_key(S) + "|" + forms_key(M);
  {
    std::shared_lock lock(leuven_memo().mutex);
    auto it = leuven_memo().table.find(key);
    if (it != leuven_memo().table.end()) return it->second;
  }
  Valued out;
  std::vector<LinearForm> all = S;
  all.insert(all.end(), M.begin(), M.end());
  const long r = rank_with_primes(all, out.bad_primes);
  const long s = static_cast<long>(S.size());
  if (s > static_cast<long>(kMaxForms)) throw BudgetError("more than " + std::to_string(kMaxForms) + " forms");

  auto merge = [&](const Valued& v) { out.bad_primes.insert(v.bad_primes.begin(), v.bad_primes.end()); };

  if (S.empty()) {
    out.value = lpow(-r);
  } else {
    std::vector<LinearForm> primitive_S;
    for (const auto& f : S) primitive_S.push_back(primitive_form(f, out.bad_primes));
    const bool all_constrained = std::all_of(primitive_S.begin(), primitive_S.end(), [&](const LinearForm& f) {
      return std::binary_search(M.begin(), M.end(), f);
    });

    if (all_constrained) {
      Valued free = leuven(n, S, {});
      merge(free);
      out.value = lpow(-r - s) * free.value;
    } else {
      // Sum over T strict subset of S of the integral over {l_T = 0, l_{S\T} != 0, M = 0}
      // of |Q_T|, with the != conditions removed by inclusion-exclusion.
      RationalFunction sigma;
      const std::uint64_t full = (std::uint64_t{1} << s) - 1;
      for (std::uint64_t t_mask = 0; t_mask < full; ++t_mask) {
        std::vector<LinearForm> T;
        for (long i = 0; i < s; ++i)
          if (t_mask >> i & 1) T.push_back(S[i]);
        const std::uint64_t rest = full & ~t_mask;
        for (std::uint64_t t2 = rest;; t2 = (t2 - 1) & rest) {
          std::set<LinearForm> constraints(M.begin(), M.end());
          for (long i = 0; i < s; ++i)
            if ((t_mask | t2) >> i & 1) constraints.insert(primitive_S[i]);
          Valued sub = leuven(n, T, std::vector<LinearForm>(constraints.begin(), constraints.end()));
          merge(sub);
          if (std::popcount(t2) % 2)
            sigma -= sub.value;
          else
            sigma += sub.value;
          if (t2 == 0) break;
        }
      }
      if (M.empty()) {
        const RationalFunction factor = RationalFunction(1) - lpow(-r - s);
        MOTINT_ASSERT(!factor.is_zero(), "1 - L^{-r-s} vanished");
        out.value = sigma / factor;
      } else {
        Valued free = leuven(n, S, {});
        merge(free);
        out.value = lpow(-r - s) * free.value + sigma;
      }
    }
  }
  std::unique_lock lock(leuven_memo().mutex);
  leuven_memo().table.try_emplace(key, out);
  return out;
}

Valued leuven_entry(const FormProduct& fp, const std::vector<LinearForm>& constraints) {
  PrimeSet bad;
  std::set<LinearForm> M;
  for (const auto& m : constraints) {
    if (m.size() != fp.n) throw DomainError("constraint length does not match the ambient dimension");
    if (is_zero_form(m)) continue;
    M.insert(primitive_form(m, bad));
  }
  Valued v = leuven(fp.n, fp.canonical().forms, std::vector<LinearForm>(M.begin(), M.end()));
  v.bad_primes.insert(bad.begin(), bad.end());
  return v;
}

PrimeSet leuven_bad_primes(const FormProduct& fp) { return leuven_entry(fp, {}).bad_primes; }

}  // namespace

MotivicResult integrate_leuven(const FormProduct& fp, const std::vector<LinearForm>& constraints) {
  fp.validate();
  Valued v = leuven_entry(fp, constraints);
  MotivicResult out;
  out.value = v.value;
  out.method = "leuven";
  out.validity = classify_validity(fp);
  out.validity.mixed_char = MixedVerdict::OutsideBadPrimes;
  out.validity.mixed_bad_primes = v.bad_primes;
  return out;
}

// ---------------------------------------------------------------------------
// One variable

Rational OneVarResult::evaluate(unsigned i) const {
  const Integer q = ipow(Integer(static_cast<unsigned long>(p)), i);
  Rational frac(Integer(static_cast<unsigned long>(cls.point_count(i))), q + 1);
  frac.canonicalize();
  return Rational(1) - frac;
}

std::optional<RationalFunction> OneVarResult::as_rational_function() const {
  for (const auto& [d, c] : cls.degree_counts)
    if (d != 1) return std::nullopt;
  const long roots = static_cast<long>(cls.total_degree());
  const LPolynomial L1 = LPolynomial::lefschetz() + LPolynomial(1);
  return RationalFunction::normalized(L1 - LPolynomial(roots), L1);
}

std::string OneVarResult::formula() const {
  if (auto rf = as_rational_function()) return rf->to_string();
  return "1 - [C]/(L + 1), C of factor degrees " + cls.to_string();
}

OneVarResult integrate_onevar(const IntegerPolynomial& f, std::uint64_t p) {
  return OneVarResult{f, p, degree_multiset(f, p)};
}

Rational NewtonMeasure::evaluate(unsigned i) const {
  if (level == 0) return 1;
  const Integer q = ipow(Integer(static_cast<unsigned long>(p)), i);
  Rational out(Integer(static_cast<unsigned long>(cls.point_count(i))), ipow(q, level));
  out.canonicalize();
  return out;
}

std::string NewtonMeasure::formula() const {
  if (level == 0) return "1";
  return "[C]*L^-" + std::to_string(level) + ", C of factor degrees " + cls.to_string();
}

NewtonMeasure newton_measure(const IntegerPolynomial& f, std::uint64_t p, unsigned level) {
  return NewtonMeasure{degree_multiset(f, p), level, p};
}

void clear_engine_cache() {
  {
    std::unique_lock lock(main_memo().mutex);
    main_memo().table.clear();
  }
  std::unique_lock lock(leuven_memo().mutex);
  leuven_memo().table.clear();
}

}  // namespace motint
