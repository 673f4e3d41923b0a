#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "gitstate/decision.hpp"
#include "gitstate/poly_parse.hpp"
#include "gitstate/simplex.hpp"
#include "support/test_util.hpp"

using namespace gitstate;
using testutil::rand_int;

namespace {

Monomial xm(int i, int e) { return Monomial::var(VarRef::x(i), e); }

Polynomial pp(const std::string& s) { return parse_polynomial(s); }

// Point of the first exterior power holding a single polynomial.
ExteriorVector form_point(const Polynomial& f, int r, int d) {
  return wedge_from_factors({f}, r, d);
}

}  // namespace

TEST_CASE("barycentric target point") {
  CHECK(xi_point(2, 1, 2) == XiPoint{Rational(1), Rational(1)});
  CHECK(xi_point(2, 2, 2) == XiPoint{Rational(2), Rational(2)});
  CHECK(xi_point(7, 2, 3) ==
        XiPoint{Rational(14, 3), Rational(14, 3), Rational(14, 3)});
  CHECK_THROWS_AS(xi_point(2, 1, 0), UsageError);
}

TEST_CASE("exact hull membership") {
  CHECK(in_hull({{2, 0}, {0, 2}}, {Rational(1), Rational(1)}));
  CHECK_FALSE(in_hull({{2, 0}}, {Rational(1), Rational(1)}));
  CHECK(in_hull({{3, 0}, {2, 1}, {0, 3}}, {Rational(3, 2), Rational(3, 2)}));
  CHECK(in_hull({{2, 0}}, {Rational(2), Rational(0)}));
  CHECK_FALSE(in_hull({{3, 0}, {2, 1}}, {Rational(0), Rational(3)}));

  // r=2 weights live on a line: membership is an interval test on the first
  // coordinate.  Cross-check against that 1-d oracle on random inputs.
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 40; ++rep) {
    int db = rand_int(rng, 2, 8);
    std::set<Character> ws;
    int n = rand_int(rng, 1, 4);
    for (int k = 0; k < n; ++k) {
      long long a = rand_int(rng, 0, db);
      ws.insert({a, db - a});
    }
    XiPoint xi{Rational(db, 2), Rational(db, 2)};
    long long lo = db, hi = 0;
    for (const auto& w : ws) {
      lo = std::min(lo, w[0]);
      hi = std::max(hi, w[0]);
    }
    bool expect = Rational(2 * lo) <= Rational(db) && Rational(db) <= Rational(2 * hi);
    CHECK(in_hull(ws, xi) == expect);
  }
  CHECK_THROWS_AS(in_hull({}, {Rational(1)}), UsageError);
  CHECK_THROWS_AS(in_hull({{2, 0}}, {Rational(1)}), UsageError);
}

TEST_CASE("nonnegative feasibility solver") {
  using M = std::vector<std::vector<Rational>>;
  // x + y = 2, x - y = 0 has the solution (1,1) >= 0.
  CHECK(feasible_nonneg(M{{1, 1}, {1, -1}}, {Rational(2), Rational(0)}));
  // x + y = -1 cannot hold with x,y >= 0.
  CHECK_FALSE(feasible_nonneg(M{{1, 1}}, {Rational(-1)}));
  // Underdetermined with a feasible ray.
  CHECK(feasible_nonneg(M{{1, -1}}, {Rational(0)}));
  // Inconsistent equalities.
  CHECK_FALSE(feasible_nonneg(M{{1, 0}, {1, 0}}, {Rational(1), Rational(2)}));
  CHECK(feasible_nonneg(M{{Rational(1, 2)}}, {Rational(3, 2)}));
}

TEST_CASE("cut-system generators") {
  // v = x_1^2 ^ x_1*x_2, weights (4,0)? no: weight of x_1^2 is (2,0), of the
  // wedge (3,1).  With C = {(3,1)} the only affected coordinate carries the
  // unipotent image; the worked values below were computed by expanding u.v.
  ExteriorVector v(2, 2, 2);
  v.add_term(WedgeIndex({xm(1, 2), xm(1, 1) * xm(2, 1)}), Polynomial(1));
  Ideal I = coefficient_ideal(v, {{3, 1}});
  REQUIRE(I.gens.size() == 1);
  CHECK(I.gens[0] == Polynomial(1));  // that coordinate is fixed by u

  ExteriorVector w = form_point(pp("x_1*x_2"), 2, 2);
  Ideal J = coefficient_ideal(w, {{2, 0}});
  REQUIRE(J.gens.size() == 1);
  CHECK(J.gens[0] == pp("g_1_2"));

  // Weights outside the cut contribute nothing.
  Ideal K = coefficient_ideal(w, {{0, 2}});
  CHECK(K.gens.empty());

  // The full weight set cuts everything: unsolvable for any nonzero point.
  Ideal full = coefficient_ideal(w, {{2, 0}, {1, 1}, {0, 2}});
  CHECK_FALSE(is_solvable(full));

  CHECK_THROWS_AS(coefficient_ideal(w, {}), UsageError);
  ExteriorVector sym(2, 1, 1);
  sym.add_term(WedgeIndex({xm(1, 1)}), Polynomial::var(VarRef::g(1, 2)));
  CHECK_THROWS_AS(coefficient_ideal(sym, {{1, 0}}), UsageError);
}

TEST_CASE("covector family") {
  auto cov2 = candidate_covectors(2, 2, 1);
  // Singleton subsets in rank 2 give the two coordinate-difference directions.
  Covector up{Rational(1), Rational(-1)};
  Covector down{Rational(-1), Rational(1)};
  CHECK(std::count(cov2.begin(), cov2.end(), up) == 1);
  CHECK(std::count(cov2.begin(), cov2.end(), down) == 1);
  for (const auto& c : cov2) {
    REQUIRE(c.size() == 2);
    CHECK(c[0] + c[1] == Rational(0));  // orthogonal to the diagonal
  }

  auto cov3 = candidate_covectors(3, 1, 1);
  CHECK(std::count(cov3.begin(), cov3.end(),
                   Covector{Rational(1), Rational(-1), Rational(0)}) == 1);
  // Pair subsets of the degree-1 weights e_i yield normals like (1,1,-2)/gcd.
  bool found_plane = false;
  for (const auto& c : cov3)
    if (c == Covector{Rational(1), Rational(1), Rational(-2)}) found_plane = true;
  CHECK(found_plane);
  for (const auto& c : cov3) CHECK(c[0] + c[1] + c[2] == Rational(0));
  // Deduplicated and deterministic.
  auto cov3b = candidate_covectors(3, 1, 1);
  CHECK(cov3 == cov3b);
  for (size_t i = 1; i < cov3.size(); ++i) CHECK(cov3[i - 1] < cov3[i]);
}

TEST_CASE("stability of binary forms") {
  // Nondegenerate: x_1*x_2 has weights (1,1) pinned at the barycenter.
  Verdict crossing = is_semistable(form_point(pp("x_1*x_2"), 2, 2));
  CHECK(crossing.semistable);
  CHECK_FALSE(crossing.certificate.has_value());
  CHECK(crossing.checked_pairs == 4);

  Verdict fermat = is_semistable(form_point(pp("x_1^3 + x_2^3"), 2, 3));
  CHECK(fermat.semistable);

  // A double point at the origin of the line is destabilized by the torus.
  Verdict dbl = is_semistable(form_point(pp("x_1^2"), 2, 2));
  CHECK_FALSE(dbl.semistable);
  REQUIRE(dbl.certificate.has_value());
  CHECK(dbl.certificate->q == Permutation{1, 2});
  CHECK(dbl.certificate->omega == Covector{Rational(1), Rational(-1)});
  CHECK(dbl.certificate->basis.polys.empty());  // empty cut: trivially solvable
  CHECK(dbl.checked_pairs >= 1);

  CHECK_FALSE(is_semistable(form_point(pp("x_1^3"), 2, 3)).semistable);
  CHECK_FALSE(is_semistable(form_point(pp("x_1^2*x_2"), 2, 3)).semistable);
  CHECK(is_semistable(form_point(pp("x_1^2*x_2 + x_2^3"), 2, 3)).semistable);
}

TEST_CASE("verdicts are invariant under coordinate changes that preserve orbits") {
  // Scaling the point does not move the state.
  ExteriorVector v = form_point(pp("x_1^2"), 2, 2);
  CHECK(is_semistable(v.scaled(Rational(7))).semistable ==
        is_semistable(v).semistable);
  // Swapping coordinates of a semistable point keeps it semistable.
  MatrixElement q = permutation_matrix({2, 1});
  ExteriorVector w = form_point(pp("x_1^2*x_2 + x_2^3"), 2, 3);
  CHECK(is_semistable(act_on_exterior(q, w)).semistable);
  ExteriorVector u = form_point(pp("x_1^2"), 2, 2);
  CHECK_FALSE(is_semistable(act_on_exterior(q, u)).semistable);
}

TEST_CASE("parallel search agrees with sequential") {
  std::vector<Polynomial> cases{pp("x_1*x_2"), pp("x_1^2"), pp("x_1^3 + x_2^3"),
                                pp("x_1^2*x_2")};
  for (const auto& f : cases) {
    int d = f.degree();
    ExteriorVector v = form_point(f, 2, d);
    Verdict s1 = is_semistable(v, 1);
    Verdict s4 = is_semistable(v, 4);
    CHECK(s1.semistable == s4.semistable);
    CHECK(s1.certificate.has_value() == s4.certificate.has_value());
    if (s1.certificate) {
      CHECK(s1.certificate->q == s4.certificate->q);
      CHECK(s1.certificate->omega == s4.certificate->omega);
    }
  }
  CHECK_THROWS_AS(is_semistable(form_point(pp("x_1*x_2"), 2, 2), 0), UsageError);
}

TEST_CASE("group-translate hull membership") {
  ExteriorVector crossing = form_point(pp("x_1*x_2"), 2, 2);
  CHECK(delta_contains_xi(crossing, MatrixElement(2)));
  ExteriorVector dbl = form_point(pp("x_1^2"), 2, 2);
  CHECK_FALSE(delta_contains_xi(dbl, MatrixElement(2)));
  CHECK_FALSE(delta_contains_xi(dbl, permutation_matrix({2, 1})));
  // x_2^2 translated by the swap lands on x_1^2: still off-center.
  ExteriorVector sq2 = form_point(pp("x_2^2"), 2, 2);
  CHECK_FALSE(delta_contains_xi(sq2, permutation_matrix({2, 1})));
  // A singular translate is rejected.
  MatrixElement sing(2);
  sing.set_entry(2, 2, Polynomial());
  sing.set_entry(1, 1, Polynomial());
  CHECK_THROWS_AS(delta_contains_xi(crossing, sing), UsageError);
}

TEST_CASE("points from ideal degree pieces") {
  // <x_1> in degree 2 spans {x_1^2, x_1*x_2}: the wedge of the reduced basis.
  ExteriorVector v = hilbert_point({pp("x_1")}, 2, 2);
  CHECK(v.b() == 2);
  CHECK(v.coord(WedgeIndex({xm(1, 2), xm(1, 1) * xm(2, 1)})) == Polynomial(1));
  CHECK(v.coords().size() == 1);

  // <x_1 + x_2> in degree 1.
  ExteriorVector w = hilbert_point({pp("x_1 + x_2")}, 2, 1);
  CHECK(w.b() == 1);
  CHECK(w.coord(WedgeIndex({xm(1, 1)})) == Polynomial(1));
  CHECK(w.coord(WedgeIndex({xm(2, 1)})) == Polynomial(1));

  // <x_1^2 - x_2^2> in degree 2 is one-dimensional with signed coordinates.
  ExteriorVector z = hilbert_point({pp("x_1^2 - x_2^2")}, 2, 2);
  CHECK(z.b() == 1);
  CHECK(z.coord(WedgeIndex({xm(1, 2)})) == Polynomial(1));
  CHECK(z.coord(WedgeIndex({xm(2, 2)})) == Polynomial(-1));

  // Generators of degree above d contribute nothing -> empty piece.
  CHECK_THROWS_AS(hilbert_point({pp("x_1^3")}, 2, 2), UsageError);
  CHECK_THROWS_AS(hilbert_point({pp("x_1 + 1")}, 2, 2), UsageError);
  CHECK_THROWS_AS(hilbert_point({pp("g_1_2")}, 2, 2), UsageError);
  CHECK_THROWS_AS(hilbert_point({}, 2, 2), UsageError);

  // Multiples of the generators land in the same span: same point up to scale.
  ExteriorVector a = hilbert_point({pp("x_1"), pp("x_1*x_2")}, 2, 2);
  CHECK(a == v);
}

TEST_CASE("colength of a degree piece") {
  CHECK(q_of_d(UniPoly::constant(Rational(1)), 2, 2) == 2);
  CHECK(q_of_d(UniPoly::constant(Rational(2)), 2, 2) == 1);
  CHECK(q_of_d(UniPoly::constant(Rational(1)), 2, 1) == 1);
  CHECK(q_of_d(parse_unipoly("6*t - 8"), 2, 1) == 4);  // C(2,1) - P(1) = 2 + 2
  // An exhausted degree piece is rejected rather than reported as zero.
  CHECK_THROWS_AS(q_of_d(parse_unipoly("t + 1"), 2, 3), UsageError);
  CHECK_THROWS_AS(q_of_d(parse_unipoly("t + 2"), 2, 3), UsageError);
  CHECK_THROWS_AS(q_of_d(parse_unipoly("1/2"), 2, 1), UsageError);
}

TEST_CASE("regularity bound from a hilbert polynomial") {
  CHECK(gotzmann_number(UniPoly::constant(Rational(1))) == 1);
  CHECK(gotzmann_number(UniPoly::constant(Rational(2))) == 2);
  CHECK(gotzmann_number(parse_unipoly("t + 1")) == 1);
  CHECK(gotzmann_number(parse_unipoly("t + 2")) == 2);
  CHECK(gotzmann_number(parse_unipoly("6*t - 8")) == 7);
  CHECK(gotzmann_number(parse_unipoly("3*t + 1")) == 4);
  CHECK_THROWS_AS(gotzmann_number(UniPoly()), UsageError);
  CHECK_THROWS_AS(gotzmann_number(parse_unipoly("-t + 1")), UsageError);
  CHECK_THROWS_AS(gotzmann_number(parse_unipoly("1/2*t")), UsageError);
}
