#pragma once

// Text syntax for linear forms and univariate polynomials.
//
//   forms := form (',' form)*
//   form  := ['+' | '-'] term (('+' | '-') term)*
//   term  := [integer ['*']] 'x' index        (index >= 1)
//
// Blanks are ignored between tokens. Coefficients of repeated variables add.

#include <string>
#include <string_view>
#include <vector>

#include "motint/engine.hpp"
#include "motint/finite_field.hpp"
#include "motint/linear_form.hpp"

namespace motint {

/// Throws ParseError (position = byte offset into `text`) on bad syntax or a
/// variable index outside 1..n, and DomainError on a form that sums to zero.
LinearForm parse_form(std::string_view text, unsigned n);
FormProduct parse_forms(std::string_view text, unsigned n);
/// An empty or blank list gives no forms.
std::vector<LinearForm> parse_form_list(std::string_view text, unsigned n);

/// Canonical text: forms of fp.canonical() joined by ", ".
std::string forms_to_string(const FormProduct& fp);

/// Univariate integer polynomial in X (or x): e.g. "X^2 + 1", "3*X - 2".
IntegerPolynomial parse_univariate(std::string_view text);
std::string univariate_to_string(const IntegerPolynomial& f);

}  // namespace motint
