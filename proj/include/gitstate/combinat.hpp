#pragma once

#include <vector>

#include "gitstate/monomial.hpp"
#include "gitstate/rational.hpp"

namespace gitstate {

// C(n, k); 0 when k < 0 or k > n, 1 when k == 0. Total on all integer inputs.
Int binomial(long long n, long long k);

Int factorial(long long n);  // pre: n >= 0

// (top)! / (top - k)! as an exact integer; pre: 0 <= k <= top.
Int falling_factorial(long long top, long long k);

// All degree-d monomials in x_1..x_r, lex-descending. Count is C(r+d-1, d).
std::vector<Monomial> monomials_of_degree(int r, int d);

}  // namespace gitstate
