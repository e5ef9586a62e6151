#pragma once

// Brute-force integration of |prod l_i| over Z_p^n, W(F_q)^n and F_q[[t]]^n by
// enumerating residue classes modulo the k-th power of the maximal ideal.
//
// A class on which every ord l_i(x) < k is determined contributes exactly
// q^{-kn} q^{-sum ord}. On the other classes |Q| lies in [0, q^{-(D + k u)}]
// (D the determined part, u the number of undetermined forms), which bounds
// the width of the bracket by q^{-k}.

#include <cstdint>
#include <string>

#include "motint/bigint.hpp"
#include "motint/engine.hpp"
#include "motint/finite_field.hpp"
#include "motint/multipoly.hpp"

namespace motint {

struct Bracket {
  Rational lower;
  Rational upper;
  unsigned depth = 0;
  std::uint64_t q = 0;

  bool contains(const Rational& x) const { return lower <= x && x <= upper; }
  Rational width() const { return upper - lower; }
  friend bool operator==(const Bracket&, const Bracket&) = default;
};

/// Largest number of residue classes any oracle enumerates.
inline constexpr std::uint64_t kMaxOracleClasses = 10'000'000;

/// Over Z_p, enumerating (Z/p^k)^n with machine integers.
Bracket padic_bracket_zp(const FormProduct& fp, std::uint64_t p, unsigned depth);

/// Over W(F_{p^i}), enumerating W_k(F_{p^i})^n with Witt arithmetic.
Bracket padic_bracket_wq(const FormProduct& fp, std::uint64_t p, unsigned degree, unsigned depth);

/// Over F_q[[t]], enumerating (F_q[t]/t^k)^n.
Bracket equalchar_bracket(const FormProduct& fp, std::uint64_t q, unsigned depth);

/// Number of x in W_m(F_{p^i})^d with ord f(x) >= level (level <= m; the
/// default level = m means f(x) = 0 in W_m). The measure of {ord f >= level}
/// is count * q^{-m d}.
std::uint64_t cylinder_count(const MultiPoly& f, std::uint64_t p, unsigned degree, unsigned m, unsigned level);
std::uint64_t cylinder_count(const MultiPoly& f, std::uint64_t p, unsigned degree, unsigned m);

/// A univariate integer polynomial as a one-variable MultiPoly.
MultiPoly univariate_polynomial(const IntegerPolynomial& f);

}  // namespace motint
