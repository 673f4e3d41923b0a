#pragma once

#include <string>

#include "gitstate/polynomial.hpp"

namespace gitstate {

// Shared text grammar: terms joined by +/-; a term is coeff, coeff*factors or
// factors; coeff is an integer or num/den; a factor is x_<i> or g_<i>_<j>,
// optionally ^<exp>. Whitespace is insignificant.
Polynomial parse_polynomial(const std::string& text);

}  // namespace gitstate
