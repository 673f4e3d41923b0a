#pragma once

#include <map>
#include <set>
#include <vector>

#include "gitstate/polynomial.hpp"

namespace gitstate {

// Total x-exponent vector (x_1..x_r) of a wedge; entries sum to d*b.
using Character = std::vector<long long>;

// Strictly lex-decreasing tuple of degree-d x-monomials; a Pluecker basis element.
class WedgeIndex {
 public:
  explicit WedgeIndex(std::vector<Monomial> factors);

  const std::vector<Monomial>& factors() const { return factors_; }
  int size() const { return static_cast<int>(factors_.size()); }

  // Tuple order: the wedge whose first differing factor is lex-greater comes first.
  static std::strong_ordering cmp(const WedgeIndex& a, const WedgeIndex& b);
  bool operator==(const WedgeIndex&) const = default;

  std::string str() const;  // "x_1^2 ^ x_1*x_2"

 private:
  std::vector<Monomial> factors_;
};

struct WedgeBefore {
  bool operator()(const WedgeIndex& a, const WedgeIndex& b) const {
    return WedgeIndex::cmp(a, b) < 0;
  }
};

Character weight_of(const WedgeIndex& w, int r);

// Element of the b-th exterior power of the degree-d piece in r variables,
// with coefficients free of x (rationals, or polynomials in g for symbolic orbits).
class ExteriorVector {
 public:
  ExteriorVector(int r, int d, int b);

  int r() const { return r_; }
  int d() const { return d_; }
  int b() const { return b_; }

  const std::map<WedgeIndex, Polynomial, WedgeBefore>& coords() const { return coords_; }
  void add_term(const WedgeIndex& w, const Polynomial& coeff);
  Polynomial coord(const WedgeIndex& w) const;

  bool is_zero() const { return coords_.empty(); }
  bool numeric() const;  // every coordinate is a constant rational

  ExteriorVector operator+(const ExteriorVector& o) const;
  ExteriorVector scaled(const Rational& c) const;
  ExteriorVector scaled(const Polynomial& c) const;
  bool operator==(const ExteriorVector&) const = default;

 private:
  int r_, d_, b_;
  std::map<WedgeIndex, Polynomial, WedgeBefore> coords_;
};

// All basis wedges for the given ambient, in the canonical tuple order.
std::vector<WedgeIndex> wedge_basis(int r, int d, int b);

// Pluecker coordinates of p_1 ^ ... ^ p_b: the coordinate at a wedge
// (n_1 > ... > n_b) is det [ coeff of p_i at n_j ]_{i,j}. Factors must be
// x-homogeneous of degree d; g-content is carried into the coordinates.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m);

ExteriorVector wedge_from_factors(const std::vector<Polynomial>& ps, int r, int d);

}  // namespace gitstate
