#include "gitstate/groebner.hpp"

#include <algorithm>

namespace gitstate {

Ideal::Ideal(std::vector<Polynomial> g) {
  bool any_x = false, any_g = false;
  for (auto& p : g) {
    if (p.is_zero()) continue;
    any_x |= p.uses_x();
    any_g |= p.uses_g();
    gens.push_back(p);
  }
  if (any_x && any_g) throw UsageError("ideal mixes x and g variables");
}

DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& divisors,
                      MonomialOrder ord) {
  DivisionResult out;
  out.quotients.assign(divisors.size(), Polynomial());
  std::vector<std::pair<Monomial, Rational>> lts;
  lts.reserve(divisors.size());
  for (auto& d : divisors) {
    if (d.is_zero()) throw UsageError("division by zero polynomial");
    lts.push_back(d.leading_term(ord));
  }
  Polynomial h = p;
  while (!h.is_zero()) {
    auto [hm, hc] = h.leading_term(ord);
    bool reduced = false;
    for (size_t k = 0; k < divisors.size(); ++k) {
      if (!lts[k].first.divides(hm)) continue;
      Rational c = hc / lts[k].second;
      Polynomial q = Polynomial::term(c, hm / lts[k].first);
      out.quotients[k] += q;
      h = h - q * divisors[k];
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial t = Polynomial::term(hc, hm);
      out.remainder += t;
      h = h - t;
    }
  }
  return out;
}

namespace {

Polynomial monic(const Polynomial& p, MonomialOrder ord) {
  return p.scaled(Rational(1) / p.leading_term(ord).second);
}

Polynomial s_poly(const Polynomial& f, const Polynomial& g, MonomialOrder ord) {
  auto [fm, fc] = f.leading_term(ord);
  auto [gm, gc] = g.leading_term(ord);
  Monomial l = Monomial::lcm(fm, gm);
  Polynomial a = Polynomial::term(Rational(1) / fc, l / fm);
  Polynomial b = Polynomial::term(Rational(1) / gc, l / gm);
  return a * f - b * g;
}

// Minimalize by leading monomials, then tail-reduce each member once.
// Leading monomials are pairwise non-divisible after the first phase and never
// change in the second, so a single pass reaches the reduced basis.
std::vector<Polynomial> inter_reduce(std::vector<Polynomial> g, MonomialOrder ord) {
  std::vector<Polynomial> minimal;
  for (size_t k = 0; k < g.size(); ++k) {
    Monomial mk = g[k].leading_monomial(ord);
    bool redundant = false;
    for (size_t t = 0; t < g.size() && !redundant; ++t) {
      if (t == k) continue;
      Monomial mt = g[t].leading_monomial(ord);
      redundant = mt.divides(mk) && (!(mk == mt) || t < k);
    }
    if (!redundant) minimal.push_back(g[k]);
  }
  for (size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (size_t t = 0; t < minimal.size(); ++t)
      if (t != k) others.push_back(minimal[t]);
    if (!others.empty()) minimal[k] = monic(divide(minimal[k], others, ord).remainder, ord);
  }
  return minimal;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& I, MonomialOrder ord, const Deadline& deadline) {
  GroebnerBasis out;
  out.order = ord;
  if (I.gens.empty()) return out;

  std::vector<Polynomial> g;
  for (auto& p : I.gens) {
    if (p.is_constant()) return GroebnerBasis{{Polynomial(1)}, ord};
    g.push_back(monic(p, ord));
  }

  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    check_deadline(deadline, "groebner basis computation");
    // Normal selection: lowest lcm under the order; ties by index for determinism.
    size_t best = 0;
    Monomial best_lcm = Monomial::lcm(g[pairs[0].first].leading_monomial(ord),
                                      g[pairs[0].second].leading_monomial(ord));
    for (size_t k = 1; k < pairs.size(); ++k) {
      Monomial l = Monomial::lcm(g[pairs[k].first].leading_monomial(ord),
                                 g[pairs[k].second].leading_monomial(ord));
      if (Monomial::cmp(l, best_lcm, ord) < 0) {
        best = k;
        best_lcm = l;
      }
    }
    auto [i, j] = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));

    Monomial mi = g[i].leading_monomial(ord), mj = g[j].leading_monomial(ord);
    if (Monomial::coprime(mi, mj)) continue;  // S-polynomial reduces to zero

    Polynomial rem = divide(s_poly(g[i], g[j], ord), g, ord).remainder;
    if (rem.is_zero()) continue;
    if (rem.is_constant()) return GroebnerBasis{{Polynomial(1)}, ord};
    rem = monic(rem, ord);
    g.push_back(rem);
    for (size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  g = inter_reduce(std::move(g), ord);
  std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
    return Monomial::cmp(a.leading_monomial(ord), b.leading_monomial(ord), ord) > 0;
  });
  out.polys = std::move(g);
  return out;
}

bool contains_one(const GroebnerBasis& G) {
  return G.polys.size() == 1 && G.polys[0] == Polynomial(1);
}

bool is_solvable(const Ideal& I, const Deadline& deadline) {
  return !contains_one(buchberger(I, MonomialOrder::Lex, deadline));
}

}  // namespace gitstate
