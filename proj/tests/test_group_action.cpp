#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gitstate/errors.hpp"
#include "gitstate/group_action.hpp"
#include "gitstate/poly_parse.hpp"
#include "support/test_util.hpp"

using namespace gitstate;
using testutil::rand_int;
using testutil::random_homogeneous;

namespace {

Monomial xm(int i, int e) { return Monomial::var(VarRef::x(i), e); }

MatrixElement random_numeric(std::mt19937_64& rng, int r) {
  MatrixElement g(r);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      g.set_entry(i, j, Polynomial(rand_int(rng, -2, 2)));
  return g;
}

}  // namespace

TEST_CASE("column convention of the action") {
  // u.x_1 = x_1 and u.x_2 = g_12*x_1 + x_2: entry (j,i) multiplies x_j in g.x_i.
  MatrixElement u = symbolic_unipotent(2);
  CHECK(act_on_poly(u, parse_polynomial("x_1")) == parse_polynomial("x_1"));
  CHECK(act_on_poly(u, parse_polynomial("x_2")) == parse_polynomial("g_1_2*x_1 + x_2"));

  MatrixElement g(2);
  g.set_entry(1, 2, Polynomial(5));
  CHECK(act_on_poly(g, parse_polynomial("x_2")) == parse_polynomial("5*x_1 + x_2"));
  g.set_entry(2, 1, Polynomial(7));
  CHECK(act_on_poly(g, parse_polynomial("x_1")) == parse_polynomial("x_1 + 7*x_2"));
}

TEST_CASE("action is multiplicative") {
  std::mt19937_64 rng(123);
  for (int rep = 0; rep < 15; ++rep) {
    int r = rand_int(rng, 2, 3);
    MatrixElement A = random_numeric(rng, r);
    MatrixElement B = random_numeric(rng, r);
    Polynomial p = random_homogeneous(rng, r, 2);
    CHECK(act_on_poly(A, act_on_poly(B, p)) == act_on_poly(A * B, p));
  }
  // Same compatibility one level up.
  for (int rep = 0; rep < 8; ++rep) {
    MatrixElement A = random_numeric(rng, 2);
    MatrixElement B = random_numeric(rng, 2);
    ExteriorVector v = wedge_from_factors(
        {random_homogeneous(rng, 2, 2), random_homogeneous(rng, 2, 2)}, 2, 2);
    CHECK(act_on_exterior(A, act_on_exterior(B, v)) == act_on_exterior(A * B, v));
  }
}

TEST_CASE("action respects wedge structure") {
  std::mt19937_64 rng(321);
  for (int rep = 0; rep < 8; ++rep) {
    MatrixElement A = random_numeric(rng, 2);
    Polynomial p = random_homogeneous(rng, 2, 2);
    Polynomial q = random_homogeneous(rng, 2, 2);
    ExteriorVector lhs = act_on_exterior(A, wedge_from_factors({p, q}, 2, 2));
    ExteriorVector rhs = wedge_from_factors({act_on_poly(A, p), act_on_poly(A, q)}, 2, 2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("permutation matrices") {
  Permutation swap{2, 1};
  MatrixElement q = permutation_matrix(swap);
  CHECK(act_on_poly(q, parse_polynomial("x_1")) == parse_polynomial("x_2"));
  CHECK(act_on_poly(q, parse_polynomial("x_2")) == parse_polynomial("x_1"));

  // Swapping x_1, x_2 sends x_1^2 ^ x_1*x_2 to x_2^2 ^ x_1*x_2 = -(x_1*x_2 ^ x_2^2).
  ExteriorVector v(2, 2, 2);
  v.add_term(WedgeIndex({xm(1, 2), xm(1, 1) * xm(2, 1)}), Polynomial(1));
  ExteriorVector qv = act_on_exterior(q, v);
  CHECK(qv.coord(WedgeIndex({xm(1, 1) * xm(2, 1), xm(2, 2)})) == Polynomial(-1));
  CHECK(qv.coords().size() == 1);

  CHECK_THROWS_AS(permutation_matrix(Permutation{1, 1}), UsageError);
  CHECK_THROWS_AS(permutation_matrix(Permutation{0, 1}), UsageError);
  CHECK_THROWS_AS(permutation_matrix(Permutation{}), UsageError);
}

TEST_CASE("unipotent and lower unipotent builders") {
  MatrixElement u = symbolic_unipotent(3);
  CHECK(u.entry(1, 1) == Polynomial(1));
  CHECK(u.entry(2, 1) == Polynomial());
  CHECK(u.entry(1, 2) == Polynomial::var(VarRef::g(1, 2)));
  CHECK(u.entry(2, 3) == Polynomial::var(VarRef::g(2, 3)));
  CHECK_FALSE(u.numeric());

  MatrixElement full = symbolic_full(2);
  CHECK(full.entry(2, 1) == Polynomial::var(VarRef::g(2, 1)));

  MatrixElement l = lower_unipotent(3, {{{2, 1}, Rational(5)}, {{3, 2}, Rational(-1)}});
  CHECK(l.entry(2, 1) == Polynomial(5));
  CHECK(l.entry(3, 2) == Polynomial(-1));
  CHECK(l.entry(1, 2) == Polynomial());
  CHECK(l.numeric());
  CHECK(l.det_numeric() == Rational(1));
  // Entries must lie strictly below the diagonal.
  CHECK_THROWS_AS(lower_unipotent(3, {{{1, 2}, Rational(1)}}), UsageError);
  CHECK_THROWS_AS(lower_unipotent(3, {{{2, 2}, Rational(1)}}), UsageError);
  CHECK_THROWS_AS(lower_unipotent(3, {{{4, 1}, Rational(1)}}), UsageError);
}

TEST_CASE("numeric determinant") {
  MatrixElement m(2);
  m.set_entry(1, 1, Polynomial(2));
  m.set_entry(1, 2, Polynomial(3));
  m.set_entry(2, 1, Polynomial(1));
  m.set_entry(2, 2, Polynomial(4));
  CHECK(m.det_numeric() == Rational(5));
  m.set_entry(2, 2, Polynomial::term(Rational(3, 2), Monomial()));
  CHECK(m.det_numeric() == Rational(0));  // 2*(3/2) - 3*1
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    MatrixElement a = random_numeric(rng, 3);
    MatrixElement b = random_numeric(rng, 3);
    CHECK((a * b).det_numeric() == a.det_numeric() * b.det_numeric());
  }
}

TEST_CASE("weight state of a point") {
  // x_1^3 + 2*x_1*x_2^2 as a vector in the first exterior power.
  ExteriorVector v(2, 3, 1);
  v.add_term(WedgeIndex({xm(1, 3)}), Polynomial(1));
  v.add_term(WedgeIndex({xm(1, 1) * xm(2, 2)}), Polynomial(2));
  std::set<Character> st = state(v);
  CHECK(st == std::set<Character>{{3, 0}, {1, 2}});

  CHECK_THROWS_AS(state(ExteriorVector(2, 3, 1)), UsageError);
  ExteriorVector sym(2, 1, 1);
  sym.add_term(WedgeIndex({xm(1, 1)}), Polynomial::var(VarRef::g(1, 2)));
  CHECK_THROWS_AS(state(sym), UsageError);
}

TEST_CASE("covector pairing") {
  CHECK(pair_value({Rational(1), Rational(-1)}, {3, 1}) == Rational(2));
  CHECK(pair_value({Rational(1, 2), Rational(0)}, {4, 0}) == Rational(2));
  CHECK_THROWS_AS(pair_value({Rational(1)}, {3, 1}), UsageError);
}
