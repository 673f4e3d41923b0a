#pragma once

#include <random>
#include <vector>

#include "gitstate/combinat.hpp"
#include "gitstate/polynomial.hpp"

namespace testutil {

using gitstate::Monomial;
using gitstate::Polynomial;
using gitstate::Rational;
using gitstate::VarRef;

inline int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random polynomial in x_1..x_r, each term of degree <= maxdeg, small integer
// coefficients.  May be zero.
inline Polynomial random_xpoly(std::mt19937_64& rng, int r, int maxdeg,
                               int max_terms = 3, int max_coeff = 3) {
  Polynomial p;
  int terms = rand_int(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int d = rand_int(rng, 0, maxdeg);
    for (int k = 0; k < d; ++k)
      m = m * Monomial::var(VarRef::x(rand_int(rng, 1, r)), 1);
    p += Polynomial::term(Rational(rand_int(rng, -max_coeff, max_coeff)), m);
  }
  return p;
}

// Random homogeneous polynomial of exact degree d in x_1..x_r.  Guaranteed
// nonzero: at least one monomial gets a nonzero coefficient.
inline Polynomial random_homogeneous(std::mt19937_64& rng, int r, int d,
                                     int max_coeff = 3) {
  auto mons = gitstate::monomials_of_degree(r, d);
  Polynomial p;
  while (p.is_zero()) {
    for (const auto& m : mons)
      p += Polynomial::term(Rational(rand_int(rng, -max_coeff, max_coeff)), m);
  }
  return p;
}

// Random polynomial in x_2..x_r only (a system entry), nonzero.
inline Polynomial random_system_poly(std::mt19937_64& rng, int r, int maxdeg,
                                     int max_terms = 3, int max_coeff = 3) {
  Polynomial p;
  while (p.is_zero()) {
    p = Polynomial();
    int terms = rand_int(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      int d = rand_int(rng, 0, maxdeg);
      for (int k = 0; k < d; ++k)
        m = m * Monomial::var(VarRef::x(rand_int(rng, 2, r)), 1);
      p += Polynomial::term(Rational(rand_int(rng, -max_coeff, max_coeff)), m);
    }
  }
  return p;
}

}  // namespace testutil
