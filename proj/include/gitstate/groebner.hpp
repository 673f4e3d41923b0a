#pragma once

#include <vector>

#include "gitstate/errors.hpp"
#include "gitstate/polynomial.hpp"

namespace gitstate {

// Finite generating set in a single-sorted ring (all-x or all-g variables).
// Zero generators are pruned; an empty list denotes the zero ideal.
struct Ideal {
  std::vector<Polynomial> gens;
  explicit Ideal(std::vector<Polynomial> g);
};

struct GroebnerBasis {
  std::vector<Polynomial> polys;  // reduced, monic, sorted by leading monomial descending
  MonomialOrder order = MonomialOrder::Lex;
};

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Multivariate division: p = sum q_i * divisors_i + remainder, no remainder term
// divisible by any divisor's leading monomial.
DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& divisors,
                      MonomialOrder ord);

// Reduced basis via the classical pair algorithm: pairs picked by lowest lcm
// (normal selection), coprime leading terms skipped, early exit on a constant.
GroebnerBasis buchberger(const Ideal& I, MonomialOrder ord, const Deadline& deadline = {});

bool contains_one(const GroebnerBasis& G);

// True iff the zero set over the algebraic closure is nonempty: reduced lex basis != {1}.
bool is_solvable(const Ideal& I, const Deadline& deadline = {});

}  // namespace gitstate
