#include "gitstate/reduction.hpp"

#include <map>
#include <stdexcept>

#include "gitstate/combinat.hpp"
#include "gitstate/errors.hpp"

namespace gitstate {

PolySystem::PolySystem(int r_, std::vector<Polynomial> polys_)
    : r(r_), polys(std::move(polys_)) {
  if (r < 1) throw UsageError("system rank must be at least 1");
  if (polys.empty()) throw UsageError("system needs at least one polynomial");
  for (const auto& p : polys) {
    if (p.uses_g()) throw UsageError("system polynomials must not use group variables");
    for (const auto& [m, c] : p.terms()) {
      for (const auto& [v, e] : m.exponents()) {
        if (v.i == 1) throw UsageError("system polynomials must not use x_1");
        if (v.i > r) throw UsageError("system polynomial uses a variable beyond x_" + std::to_string(r));
      }
    }
  }
}

int PolySystem::degree() const {
  int d = 0;
  for (const auto& p : polys) d = std::max(d, p.degree());
  return d;
}

SCInstance::SCInstance(ExteriorVector pt, Character chi)
    : point(std::move(pt)), character(std::move(chi)) {
  if (point.is_zero()) throw UsageError("instance point must be nonzero");
  if (!point.numeric()) throw UsageError("instance point must have rational coordinates");
  if (static_cast<int>(character.size()) != point.r())
    throw UsageError("character length must equal the rank");
}

ESCInstance::ESCInstance(ExteriorVector pt, std::vector<Character> chis)
    : point(std::move(pt)), characters(std::move(chis)) {
  if (point.is_zero()) throw UsageError("instance point must be nonzero");
  if (!point.numeric()) throw UsageError("instance point must have rational coordinates");
  if (characters.empty()) throw UsageError("instance needs at least one character");
  for (const auto& chi : characters)
    if (static_cast<int>(chi.size()) != point.r())
      throw UsageError("character length must equal the rank");
}

Rational alternating_sum(int l, int j) {
  if (l < 1 || j < 0 || j > l - 1) throw UsageError("alternating_sum needs 0 <= j <= l-1");
  Int acc = 0;
  for (int a = 0; a <= l - 1 - j; ++a) {
    Int term = binomial(2 * l - 1 - j, a);
    acc += (a % 2 == 0) ? term : -term;
  }
  return Rational(acc);
}

std::vector<Polynomial> build_psi(const PolySystem& p) {
  const int l = p.l();
  const int d = p.degree();
  std::vector<Polynomial> psi;
  psi.reserve(l);
  for (int i = 0; i < l; ++i) {
    Rational head = -Rational(falling_factorial(2 * l - 1, i)) * alternating_sum(l, i);
    Polynomial pi(head);
    if (i >= 2) {
      const Polynomial& gen = p.polys[static_cast<size_t>(i - 2)];
      int pad = d - gen.degree();
      pi += Polynomial::term(Rational(1), Monomial::var(VarRef::x(1), pad)) * gen;
    }
    psi.push_back(std::move(pi));
  }
  return psi;
}

FSequence build_F(const std::vector<Polynomial>& psi) {
  const int l = static_cast<int>(psi.size());
  if (l < 1) throw UsageError("psi sequence must be nonempty");
  FSequence F(static_cast<size_t>(2 * l), Polynomial());
  Rational inv_fact(1);
  for (int i = 0; i < l; ++i) {
    if (i > 0) inv_fact /= i;
    F[static_cast<size_t>(i)] = psi[static_cast<size_t>(i)].scaled(inv_fact);
  }
  F[static_cast<size_t>(2 * l - 1)] = Polynomial(1);
  return F;
}

namespace {

// Pads every term with a power of x_1 so the result is homogeneous of degree d.
Polynomial homogenize_x1(const Polynomial& p, int d) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    int pad = d - m.degree();
    if (pad < 0) throw UsageError("coefficient degree exceeds the homogenization target");
    out += Polynomial::term(c, m * Monomial::var(VarRef::x(1), pad));
  }
  return out;
}

// x_1 -> 1, x_k -> g_1k for 2 <= k <= r; result lives in the g-variables.
Polynomial tilde(const Polynomial& p, int r) {
  std::map<VarRef, Polynomial> sub;
  sub.emplace(VarRef::x(1), Polynomial(1));
  for (int k = 2; k <= r; ++k) sub.emplace(VarRef::x(k), Polynomial::var(VarRef::g(1, k)));
  return p.substitute(sub);
}

}  // namespace

ExteriorVector build_point(const FSequence& F, int r, int d) {
  const int n = static_cast<int>(F.size());
  if (n < 2 || n % 2 != 0) throw UsageError("coefficient sequence must have even length");
  const int l = n / 2;
  if (r < 1) throw UsageError("rank must be at least 1");
  for (const auto& f : F) {
    if (f.uses_g()) throw UsageError("coefficients must not use group variables");
    if (f.max_x_index() > r) throw UsageError("coefficient uses a variable beyond x_" + std::to_string(r));
    if (f.degree() > d) throw UsageError("coefficient degree exceeds d");
  }
  Polynomial p1, p2;
  const VarRef xnew = VarRef::x(r + 1);
  const VarRef x1 = VarRef::x(1);
  for (int i = 0; i < 2 * l; ++i) {
    Polynomial h = homogenize_x1(F[static_cast<size_t>(i)], d);
    p1 += Polynomial::term(Rational(1), Monomial::var(xnew, i) * Monomial::var(x1, 2 * l - i)) * h;
    p2 += Polynomial::term(Rational(1), Monomial::var(xnew, i + 1) * Monomial::var(x1, 2 * l - i - 1)) * h;
  }
  return wedge_from_factors({p1, p2}, r + 1, 2 * l + d);
}

std::vector<Polynomial> f_polys(const FSequence& F, int r, int l, int d) {
  (void)d;
  if (static_cast<int>(F.size()) != 2 * l) throw UsageError("coefficient sequence length must be 2l");
  std::vector<Polynomial> Ft;
  Ft.reserve(F.size());
  for (const auto& f : F) Ft.push_back(tilde(f, r));
  const VarRef g = VarRef::g(1, r + 1);
  std::vector<Polynomial> out;
  out.reserve(static_cast<size_t>(2 * l - 1));
  for (int a = 0; a <= 2 * l - 2; ++a) {
    Polynomial fa;
    for (int i = 0; i < 2 * l; ++i) {
      for (int j = i; j < 2 * l; ++j) {
        Int br;
        if (j == i) {
          br = binomial(i, a) * binomial(i, 2 * l - a - 1);
        } else {
          br = binomial(i, a) * binomial(j, 2 * l - a - 1) + binomial(i, 2 * l - a - 1) * binomial(j, a);
        }
        if (br == 0) continue;
        int e = i + j - 2 * l + 1;
        if (e < 0) throw std::logic_error("negative exponent with nonzero binomial weight");
        fa += (Ft[static_cast<size_t>(i)] * Ft[static_cast<size_t>(j)])
                  .scaled(Rational(br)) *
              Polynomial::term(Rational(1), Monomial::var(g, e));
      }
    }
    out.push_back(std::move(fa));
  }
  return out;
}

std::vector<Polynomial> pi_polys(const std::vector<Polynomial>& psi, int r, int l, int d) {
  if (static_cast<int>(psi.size()) != l) throw UsageError("psi sequence length must be l");
  for (const auto& q : psi) {
    if (q.uses_g()) throw UsageError("psi must not use group variables");
    if (q.degree() > d) throw UsageError("psi degree exceeds d");
  }
  const VarRef g = VarRef::g(1, r + 1);
  std::vector<Polynomial> out;
  out.reserve(psi.size());
  for (int j = 0; j < l; ++j) {
    Rational head = Rational(falling_factorial(2 * l - 1, j)) * alternating_sum(l, j);
    Polynomial pj = Polynomial::term(head, Monomial::var(g, 2 * l - 1));
    pj += tilde(psi[static_cast<size_t>(j)], r) * Polynomial::term(Rational(1), Monomial::var(g, j));
    out.push_back(std::move(pj));
  }
  return out;
}

Character target_character(int r, int l, int d) {
  Character chi(static_cast<size_t>(r) + 1, 0);
  chi.front() = 2 * d + 2 * l;
  chi.back() = 2 * l;
  return chi;
}

SCInstance reduce_sysal_to_sc(const PolySystem& p) {
  auto psi = build_psi(p);
  auto F = build_F(psi);
  ExteriorVector v = build_point(F, p.r, p.degree());
  return SCInstance(std::move(v), target_character(p.r, p.l(), p.degree()));
}

MatrixElement witness_from_root(const PolySystem& p, const std::vector<Rational>& root) {
  if (static_cast<int>(root.size()) != p.r - 1)
    throw UsageError("root must assign values to x_2..x_r");
  std::map<VarRef, Polynomial> sub;
  for (int k = 2; k <= p.r; ++k)
    sub.emplace(VarRef::x(k), Polynomial(root[static_cast<size_t>(k - 2)]));
  for (const auto& q : p.polys)
    if (!q.substitute(sub).is_zero())
      throw UsageError("proposed root does not annihilate the system");
  MatrixElement m(p.r + 1);
  for (int k = 2; k <= p.r; ++k)
    m.set_entry(1, k, Polynomial(root[static_cast<size_t>(k - 2)]));
  m.set_entry(1, p.r + 1, Polynomial(1));
  return m;
}

UniPoly hilbert_polynomial_of_point(int r, int l, int d) {
  if (r < 2) throw UsageError("rank must be at least 2");
  UniPoly h = UniPoly::binomial_t(r, r);
  h = h - UniPoly::binomial_t(r - 2 * l - d + 1, r);
  h = h + UniPoly::binomial_t(r - 2 * l - d - 1, r - 2);
  return h;
}

}  // namespace gitstate
