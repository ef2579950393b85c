#pragma once

#include <string>

#include "rht/algebra.hpp"

namespace rht {

// Polynomial text grammar used by every external interface:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | name ('^' exponent)?
// with rationals written "p" or "p/q", names matching
// [A-Za-z][A-Za-z0-9_']* and insignificant whitespace. "0" is the zero
// element.
Element parse_element(const std::string& text, const GeneratorSetPtr& ambient);

// Canonical form: terms in monomial order, exact coefficients, exponents
// as "^k" for k >= 2. Parsing the result reproduces the element.
std::string format_element(const Element& e);

} // namespace rht
