#pragma once

#include <vector>

#include "gitstate/exterior.hpp"
#include "gitstate/group_action.hpp"
#include "gitstate/polynomial.hpp"
#include "gitstate/unipoly.hpp"

namespace gitstate {

// Input system: polynomials in x_2..x_r, no x_1, no g. l = count + 2.
struct PolySystem {
  int r;
  std::vector<Polynomial> polys;

  PolySystem(int r, std::vector<Polynomial> polys);
  int l() const { return static_cast<int>(polys.size()) + 2; }
  int degree() const;  // max total degree; 0 when every entry is constant
};

// Coefficient sequence (F_0..F_{2l-1}) for the two wedge factors.
using FSequence = std::vector<Polynomial>;

struct SCInstance {
  ExteriorVector point;
  Character character;
  SCInstance(ExteriorVector pt, Character chi);
};

struct ESCInstance {
  ExteriorVector point;
  std::vector<Character> characters;
  ESCInstance(ExteriorVector pt, std::vector<Character> chis);
};

// sum_{a=0}^{l-1-j} (-1)^a C(2l-1-j, a); nonzero with sign (-1)^(l-1-j).
Rational alternating_sum(int l, int j);

std::vector<Polynomial> build_psi(const PolySystem& p);  // length l

FSequence build_F(const std::vector<Polynomial>& psi);  // length 2l

// v = (sum_i x_{r+1}^i x_1^{2l-i} F_i) ^ (sum_i x_{r+1}^{i+1} x_1^{2l-i-1} F_i)
// in the (r+1, 2l+d, 2) ambient; each F_i is x_1-homogenized to degree d first.
ExteriorVector build_point(const FSequence& F, int r, int d);

// Orbit coordinates at the distinguished wedges, dehomogenized at x_1 = 1, as
// partial sums: f_a - f_{a-1} is the coordinate at the a-th wedge.
std::vector<Polynomial> f_polys(const FSequence& F, int r, int l, int d);

// Triangular change of basis of the same span:
// pi_j = (2l-1)!/(2l-1-j)! alternating_sum(l,j) g_{1,r+1}^{2l-1} + psi~_j g_{1,r+1}^j.
std::vector<Polynomial> pi_polys(const std::vector<Polynomial>& psi, int r, int l, int d);

Character target_character(int r, int l, int d);  // (2d+2l, 0, ..., 0, 2l), length r+1

SCInstance reduce_sysal_to_sc(const PolySystem& p);

// Upper unipotent in rank r+1 with first row (1, root_2,...,root_r, 1);
// validates that the root kills every system polynomial.
MatrixElement witness_from_root(const PolySystem& p, const std::vector<Rational>& root);

// C(r+t, r) - C(r+t-2l-d+1, r) + C(r+t-2l-d-1, r-2); pre: r >= 2.
UniPoly hilbert_polynomial_of_point(int r, int l, int d);

}  // namespace gitstate
