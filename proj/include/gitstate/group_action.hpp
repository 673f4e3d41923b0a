#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gitstate/exterior.hpp"
#include "gitstate/polynomial.hpp"

namespace gitstate {

// One-line permutation of 1..r: q[i-1] is the image of i.
using Permutation = std::vector<int>;

using Covector = std::vector<Rational>;

// r x r matrix with polynomial entries; acts on variables by g.x_i = sum_j g_ji x_j.
class MatrixElement {
 public:
  explicit MatrixElement(int r);  // identity

  int size() const { return r_; }
  const Polynomial& entry(int i, int j) const;  // 1-based
  void set_entry(int i, int j, Polynomial v);

  MatrixElement operator*(const MatrixElement& o) const;
  bool numeric() const;
  Rational det_numeric() const;  // pre: numeric

 private:
  int r_;
  std::vector<std::vector<Polynomial>> a_;
};

// Diagonal 1, strictly below 0, strictly above the symbolic entries g_ij.
MatrixElement symbolic_unipotent(int r);

// Every entry the symbolic variable g_ij; for identity checks on the full group.
MatrixElement symbolic_full(int r);

MatrixElement permutation_matrix(const Permutation& q);  // q.x_i = x_{q(i)}

// Diagonal 1 with the given strictly-lower rational entries at (row, col), row > col.
MatrixElement lower_unipotent(int r, const std::map<std::pair<int, int>, Rational>& entries);

Rational pair_value(const Covector& omega, const Character& chi);

Polynomial act_on_poly(const MatrixElement& g, const Polynomial& p);
ExteriorVector act_on_exterior(const MatrixElement& g, const ExteriorVector& v);

// Weights of the nonzero coordinates; usage error on symbolic coordinates.
std::set<Character> state(const ExteriorVector& v);

}  // namespace gitstate
