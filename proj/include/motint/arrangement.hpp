#pragma once

// Classes of hyperplane-arrangement strata
//
//   { x in A^n : l(x) = 0 for l in eq, m(x) != 0 for m in neq }
//
// as polynomials in L, by deletion-restriction.

#include <cstdint>
#include <vector>

#include "motint/bigint.hpp"
#include "motint/linear_form.hpp"
#include "motint/lpoly.hpp"

namespace motint {

struct StratumSpec {
  unsigned n = 0;
  std::vector<LinearForm> eq;
  std::vector<LinearForm> neq;
  /// 0 selects the generic mode (coefficients over Q, "p large"); otherwise
  /// the computation runs over F_p.
  std::uint64_t p = 0;
};

/// The neq forms restricted to U = common kernel of the eq forms, written in
/// coordinates on a basis of U.
struct RestrictedStratum {
  unsigned dim = 0;
  std::vector<LinearForm> forms;
  /// Generic mode: primes at which elimination could behave differently.
  PrimeSet bad_primes;
};

/// In prime mode the restricted coefficients are residues in [0, p). In
/// generic mode they are rescaled to primitive integer vectors.
RestrictedStratum kernel_restrict(const StratumSpec& spec);

struct StratumClass {
  LPolynomial value;
  /// Generic mode only: outside these primes the class agrees with the
  /// prime-mode result.
  PrimeSet bad_primes;
};

/// Memoized; safe to call from several threads.
StratumClass stratum_class(const StratumSpec& spec);

/// Number of F_q-points of the stratum by exhaustive enumeration (q a prime
/// power, q^n <= kMaxStratumPoints). spec.p is ignored.
std::uint64_t count_stratum_points(const StratumSpec& spec, std::uint64_t q);

inline constexpr std::uint64_t kMaxStratumPoints = 10'000'000;

/// Drops the memo table (tests and benchmarks).
void clear_stratum_cache();

}  // namespace motint
