#pragma once

#include <optional>
#include <set>
#include <vector>

#include "gitstate/errors.hpp"
#include "gitstate/exterior.hpp"
#include "gitstate/groebner.hpp"
#include "gitstate/group_action.hpp"
#include "gitstate/reduction.hpp"
#include "gitstate/unipoly.hpp"

namespace gitstate {

using XiPoint = std::vector<Rational>;

XiPoint xi_point(int d, int b, int r);  // (db/r, ..., db/r)

// Exact membership of xi in the convex hull of the weights.
bool in_hull(const std::set<Character>& weights, const XiPoint& xi);

// Generators { coordinate of (u.v) at w : weight_of(w) in C } with u the
// symbolic upper unipotent; zero set is { u : C cap Xi_{u.v} = empty }.
Ideal coefficient_ideal(const ExteriorVector& v, const std::set<Character>& C);

struct SolveResult {
  bool solvable;
  GroebnerBasis basis;  // lex basis of the coefficient ideal
};

SolveResult solve_sc(const SCInstance& inst, const Deadline& deadline = {});
SolveResult solve_esc(const ESCInstance& inst, const Deadline& deadline = {});

// Finite covector family complete for separating xi from any subset of the
// ambient weight set: primitive normals (orthogonal to the all-ones vector) of
// hyperplanes spanned by weight subsets, both orientations, plus e_i - e_j.
std::vector<Covector> candidate_covectors(int r, int d, int b);

struct Certificate {
  Permutation q;
  Covector omega;
  GroebnerBasis basis;
};

struct Verdict {
  bool semistable;
  std::optional<Certificate> certificate;  // engaged iff unstable
  long long checked_pairs;                 // total (q, omega) pairs when semistable
};

// Searches q in Sigma_r and omega in candidate_covectors for a solvable
// cut system on q.v; first success in enumeration order wins, also under
// parallel execution.
Verdict is_semistable(const ExteriorVector& v, int jobs = 1, const Deadline& deadline = {});

bool delta_contains_xi(const ExteriorVector& v, const MatrixElement& g);

// Wedge of an exact row-reduced basis of the degree-d piece of <gens>.
ExteriorVector hilbert_point(const std::vector<Polynomial>& gens, int r, int d);

Int q_of_d(const UniPoly& P, int r, int d);  // C(r+d-1, d) - P(d), must be positive

// Length s of the decomposition P(t) = sum_{i=1..s} C(t + a_i - i + 1, a_i),
// a_1 >= ... >= a_s >= 0.
long long gotzmann_number(const UniPoly& P);

}  // namespace gitstate
