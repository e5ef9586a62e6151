#pragma once

// JSON encodings shared by the command-line tool and the Python module.
// Integers and rationals are strings ("a/b"), never JSON numbers.

#include <json.hpp>

#include "motint/arrangement.hpp"
#include "motint/engine.hpp"
#include "motint/oracle.hpp"
#include "motint/rational_function.hpp"

namespace motint {

using Json = nlohmann::ordered_json;

Json to_json(const LPolynomial& p);
/// {"text", "num_coeffs", "den_coeffs"}, coefficients ascending in L.
Json to_json(const RationalFunction& f);
/// Inverse of to_json(RationalFunction); re-canonicalizes.
RationalFunction rational_function_from_json(const Json& j);
Json to_json(const PrimeSet& primes);
Json to_json(const ValidityReport& v);
Json to_json(const Bracket& b);
Json to_json(const TraceNode& t);

}  // namespace motint
