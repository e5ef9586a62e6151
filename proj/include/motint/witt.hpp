#pragma once

// Truncated p-typical Witt vectors.
//
// The ring W_k(A) is A^k with addition and multiplication given coordinatewise
// by the structure polynomials S_m, P_m in Z[X_0..X_m, Y_0..Y_m]. These are
// obtained by solving the ghost equations
//
//   w_m(S_0..S_m) = w_m(X) + w_m(Y),   w_m(P_0..P_m) = w_m(X) * w_m(Y),
//   w_m(Z) = sum_{i<=m} p^i Z_i^{p^{m-i}},
//
// one coordinate at a time. Division by p^m in that solve must be exact over Z;
// a remainder aborts with InternalError.

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "motint/bigint.hpp"
#include "motint/errors.hpp"
#include "motint/multipoly.hpp"

namespace motint {

class WittContext {
 public:
  static constexpr unsigned kMaxLength = 5;
  /// Largest p^(k-1) accepted; bounds the degree of the structure polynomials.
  static constexpr std::uint64_t kMaxTopDegree = 125;

  /// Shared, cached context for (p, k). Construction happens once per pair;
  /// concurrent callers receive the same published instance.
  static std::shared_ptr<const WittContext> get(std::uint64_t p, unsigned length);

  std::uint64_t prime() const { return p_; }
  unsigned length() const { return k_; }

  /// S_m and P_m as polynomials in 2k variables: X_j is variable j, Y_j is
  /// variable k + j.
  const MultiPoly& sum_polynomial(unsigned m) const { return sums_.at(m); }
  const MultiPoly& product_polynomial(unsigned m) const { return products_.at(m); }

  /// w_m as a polynomial in `nvars` variables starting at `offset`.
  static MultiPoly ghost_polynomial(std::uint64_t p, unsigned m, unsigned nvars, unsigned offset);

  /// One line per monomial: "S<m>: e_0 ... e_{2k-1} : coefficient".
  void dump(std::ostream& os) const;

  WittContext(std::uint64_t p, unsigned length);

 private:
  std::uint64_t p_;
  unsigned k_;
  std::vector<MultiPoly> sums_;
  std::vector<MultiPoly> products_;
};

/// Element of W_k(A) (context set) or of A[t]/(t^k) (context null).
template <class E>
struct WittVector {
  const WittContext* context = nullptr;
  std::vector<E> coeffs;

  std::size_t length() const { return coeffs.size(); }
  friend bool operator==(const WittVector& a, const WittVector& b) {
    return a.context == b.context && a.coeffs == b.coeffs;
  }
};

namespace detail {

// A polynomial with coefficients mapped into a ring, flattened for evaluation.
template <class Ring>
struct CompiledPolynomial {
  struct Term {
    typename Ring::Element coeff;
    std::vector<std::pair<unsigned, std::uint32_t>> factors;  // (variable, exponent)
  };
  std::vector<Term> terms;
};

template <class Ring>
CompiledPolynomial<Ring> compile(const MultiPoly& f, const Ring& ring) {
  CompiledPolynomial<Ring> out;
  for (const auto& [mono, c] : f.terms()) {
    auto coeff = ring.from_integer(c);
    if (ring.is_zero(coeff)) continue;
    typename CompiledPolynomial<Ring>::Term t{coeff, {}};
    for (unsigned v = 0; v < mono.size(); ++v)
      if (mono[v]) t.factors.emplace_back(v, mono[v]);
    out.terms.push_back(std::move(t));
  }
  return out;
}

// Evaluates several compiled polynomials on shared inputs, caching powers.
template <class Ring>
class PowerCache {
 public:
  PowerCache(const Ring& ring, std::span<const typename Ring::Element> inputs)
      : ring_(ring), inputs_(inputs), powers_(inputs.size()) {}

  const typename Ring::Element& get(unsigned var, std::uint32_t e) {
    auto& row = powers_[var];
    if (row.empty()) row.push_back(inputs_[var]);
    while (row.size() < e) row.push_back(ring_.mul(row.back(), inputs_[var]));
    return row[e - 1];
  }

  typename Ring::Element evaluate(const CompiledPolynomial<Ring>& f) {
    auto acc = ring_.zero();
    for (const auto& t : f.terms) {
      auto term = t.coeff;
      for (auto [v, e] : t.factors) term = ring_.mul(term, get(v, e));
      acc = ring_.add(acc, term);
    }
    return acc;
  }

 private:
  const Ring& ring_;
  std::span<const typename Ring::Element> inputs_;
  std::vector<std::vector<typename Ring::Element>> powers_;
};

}  // namespace detail

/// Witt coordinates of an integer n in W_k(Z), by inverting the ghost map
/// on the constant ghost vector (n, n, ...).
std::vector<Integer> witt_coordinates_of_integer(const Integer& n, std::uint64_t p, unsigned length);

/// A polynomial with Witt-vector coefficients: sum of coeff * prod x_v^{e_v}.
template <class E>
struct WittPolynomialTerm {
  WittVector<E> coeff;
  std::vector<std::uint32_t> exponents;
};

/// Arithmetic of W_k(R) for a coefficient ring R.
///
/// R provides Element, zero(), one(), add(), mul(), neg(), from_integer(),
/// is_zero() and characteristic() (0 for Z). The ring is held by value.
template <class Ring>
class WittArithmetic {
 public:
  using Element = typename Ring::Element;
  using Vector = WittVector<Element>;

  WittArithmetic(std::shared_ptr<const WittContext> context, Ring ring)
      : context_(std::move(context)), ring_(std::move(ring)) {
    const unsigned k = context_->length();
    for (unsigned m = 0; m < k; ++m) {
      sums_.push_back(detail::compile(context_->sum_polynomial(m), ring_));
      products_.push_back(detail::compile(context_->product_polynomial(m), ring_));
    }
    minus_one_ = from_integer(-1);
  }

  const WittContext& context() const { return *context_; }
  const Ring& ring() const { return ring_; }
  unsigned length() const { return context_->length(); }
  std::uint64_t prime() const { return context_->prime(); }

  Vector make(std::vector<Element> coeffs) const {
    if (coeffs.size() != length()) throw DomainError("Witt vector has wrong length");
    return Vector{context_.get(), std::move(coeffs)};
  }
  Vector zero() const { return make(std::vector<Element>(length(), ring_.zero())); }
  Vector one() const { return teichmuller(ring_.one()); }

  /// R(c) = (c, 0, ..., 0).
  Vector teichmuller(const Element& c) const {
    Vector v = zero();
    v.coeffs[0] = c;
    return v;
  }

  /// Image of an integer under Z -> W_k(Z) -> W_k(R).
  Vector from_integer(const Integer& n) const {
    std::vector<Element> c;
    for (const auto& x : witt_coordinates_of_integer(n, prime(), length())) c.push_back(ring_.from_integer(x));
    return make(std::move(c));
  }

  Vector add(const Vector& a, const Vector& b) const { return apply(sums_, a, b); }
  Vector mul(const Vector& a, const Vector& b) const { return apply(products_, a, b); }
  Vector neg(const Vector& a) const { return mul(minus_one_, a); }
  Vector sub(const Vector& a, const Vector& b) const { return add(a, neg(b)); }

  /// n * a by repeated addition, n >= 0.
  Vector times(const Vector& a, unsigned n) const {
    Vector r = zero();
    for (unsigned i = 0; i < n; ++i) r = add(r, a);
    return r;
  }

  Vector pow(Vector a, unsigned e) const {
    Vector r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      e >>= 1;
      if (e) a = mul(a, a);
    }
    return r;
  }

  /// V(a0, a1, ...) = (0, a0, a1, ...), truncated.
  Vector verschiebung(const Vector& a) const {
    check(a);
    Vector r = zero();
    for (unsigned i = 1; i < length(); ++i) r.coeffs[i] = a.coeffs[i - 1];
    return r;
  }

  /// F(a) = (a0^p, a1^p, ...); R must have characteristic p.
  Vector frobenius(const Vector& a) const {
    check(a);
    if (ring_.characteristic() != prime())
      throw DomainError("Frobenius needs a coefficient ring of characteristic " + std::to_string(prime()));
    Vector r = a;
    for (auto& c : r.coeffs) c = ring_pow(ring_, c, prime());
    return r;
  }

  /// Ghost components w_0(a), ..., w_{k-1}(a) evaluated in R.
  std::vector<Element> ghost(const Vector& a) const {
    check(a);
    std::vector<Element> g;
    const Integer p(static_cast<unsigned long>(prime()));
    for (unsigned m = 0; m < length(); ++m) {
      auto acc = ring_.zero();
      for (unsigned i = 0; i <= m; ++i) {
        const std::uint64_t e = ipow(p, m - i).get_ui();
        acc = ring_.add(acc, ring_.mul(ring_.from_integer(ipow(p, i)), ring_pow(ring_, a.coeffs[i], e)));
      }
      g.push_back(acc);
    }
    return g;
  }

  /// Index of the first nonzero coordinate; nullopt means ord >= k.
  std::optional<unsigned> ord(const Vector& a) const {
    check(a);
    for (unsigned i = 0; i < length(); ++i)
      if (!ring_.is_zero(a.coeffs[i])) return i;
    return std::nullopt;
  }

  /// Evaluates sum coeff * prod args[v]^{e_v}.
  Vector evaluate(std::span<const WittPolynomialTerm<Element>> f, std::span<const Vector> args) const {
    std::vector<std::vector<Vector>> powers(args.size());
    Vector acc = zero();
    for (const auto& term : f) {
      if (term.exponents.size() != args.size()) throw DomainError("polynomial arity mismatch");
      Vector t = term.coeff;
      check(t);
      for (std::size_t v = 0; v < args.size(); ++v) {
        const auto e = term.exponents[v];
        if (e == 0) continue;
        auto& row = powers[v];
        if (row.empty()) row.push_back(args[v]);
        while (row.size() < e) row.push_back(mul(row.back(), args[v]));
        t = mul(t, row[e - 1]);
      }
      acc = add(acc, t);
    }
    return acc;
  }

  /// Evaluates an integer polynomial (coefficients mapped through from_integer).
  Vector evaluate(const MultiPoly& f, std::span<const Vector> args) const {
    std::vector<WittPolynomialTerm<Element>> terms;
    for (const auto& [mono, c] : f.terms()) terms.push_back({from_integer(c), mono});
    return evaluate(std::span<const WittPolynomialTerm<Element>>(terms), args);
  }

 private:
  void check(const Vector& a) const {
    if (a.context != context_.get() || a.coeffs.size() != length())
      throw DomainError("Witt vector belongs to a different context");
  }

  Vector apply(const std::vector<detail::CompiledPolynomial<Ring>>& polys, const Vector& a, const Vector& b) const {
    check(a);
    check(b);
    std::vector<Element> inputs;
    inputs.reserve(2 * length());
    inputs.insert(inputs.end(), a.coeffs.begin(), a.coeffs.end());
    inputs.insert(inputs.end(), b.coeffs.begin(), b.coeffs.end());
    detail::PowerCache<Ring> cache(ring_, inputs);
    std::vector<Element> out;
    out.reserve(length());
    for (const auto& f : polys) out.push_back(cache.evaluate(f));
    return Vector{context_.get(), std::move(out)};
  }

  std::shared_ptr<const WittContext> context_;
  Ring ring_;
  std::vector<detail::CompiledPolynomial<Ring>> sums_;
  std::vector<detail::CompiledPolynomial<Ring>> products_;
  Vector minus_one_;
};

/// Truncated power series R[t]/(t^k) in the same vector shape (carry-free).
template <class Ring>
class SeriesArithmetic {
 public:
  using Element = typename Ring::Element;
  using Vector = WittVector<Element>;

  SeriesArithmetic(unsigned length, Ring ring) : k_(length), ring_(std::move(ring)) {
    if (length < 1) throw DomainError("series truncation length must be positive");
  }

  const Ring& ring() const { return ring_; }
  unsigned length() const { return k_; }

  Vector make(std::vector<Element> coeffs) const {
    if (coeffs.size() != k_) throw DomainError("series has wrong length");
    return Vector{nullptr, std::move(coeffs)};
  }
  Vector zero() const { return make(std::vector<Element>(k_, ring_.zero())); }
  Vector one() const { return teichmuller(ring_.one()); }
  Vector teichmuller(const Element& c) const {
    Vector v = zero();
    v.coeffs[0] = c;
    return v;
  }
  Vector from_integer(const Integer& n) const { return teichmuller(ring_.from_integer(n)); }

  Vector add(const Vector& a, const Vector& b) const {
    Vector r = zero();
    for (unsigned i = 0; i < k_; ++i) r.coeffs[i] = ring_.add(a.coeffs[i], b.coeffs[i]);
    return r;
  }
  Vector neg(const Vector& a) const {
    Vector r = zero();
    for (unsigned i = 0; i < k_; ++i) r.coeffs[i] = ring_.neg(a.coeffs[i]);
    return r;
  }
  Vector sub(const Vector& a, const Vector& b) const { return add(a, neg(b)); }
  Vector mul(const Vector& a, const Vector& b) const {
    Vector r = zero();
    for (unsigned i = 0; i < k_; ++i) {
      if (ring_.is_zero(a.coeffs[i])) continue;
      for (unsigned j = 0; i + j < k_; ++j) r.coeffs[i + j] = ring_.add(r.coeffs[i + j], ring_.mul(a.coeffs[i], b.coeffs[j]));
    }
    return r;
  }
  /// Multiplication by t.
  Vector verschiebung(const Vector& a) const {
    Vector r = zero();
    for (unsigned i = 1; i < k_; ++i) r.coeffs[i] = a.coeffs[i - 1];
    return r;
  }
  std::optional<unsigned> ord(const Vector& a) const {
    for (unsigned i = 0; i < k_; ++i)
      if (!ring_.is_zero(a.coeffs[i])) return i;
    return std::nullopt;
  }

 private:
  unsigned k_;
  Ring ring_;
};

/// Coordinates f_0, ..., f_{N-1} of f(x_1, ..., x_d) on generic Witt vectors
/// x_i = (X_{i,0}, ..., X_{i,N-1}), as polynomials over F_p. Variable X_{i,j}
/// has index i * N + j.
std::vector<MultiPoly> universal_coordinate_polynomials(const MultiPoly& f, std::uint64_t p, unsigned depth);

}  // namespace motint
