#pragma once

#include <string>
#include <vector>

#include "motint/bigint.hpp"

namespace motint {

/// Integer linear form c_1 x_1 + ... + c_n x_n, stored as its coefficient vector.
using LinearForm = std::vector<Integer>;

bool is_zero_form(const LinearForm& f);
/// Number of nonzero coefficients.
unsigned support_size(const LinearForm& f);
/// f or -f, whichever has a positive first nonzero coefficient.
LinearForm sign_normalized(LinearForm f);
/// e.g. "x1 - 2*x2"; "0" for the zero form.
std::string form_to_string(const LinearForm& f);
/// The coordinate form x_{i+1} in n variables.
LinearForm coordinate_form(unsigned n, unsigned i);

}  // namespace motint
