#include "gitstate/group_action.hpp"

#include "gitstate/errors.hpp"

namespace gitstate {

MatrixElement::MatrixElement(int r) : r_(r) {
  if (r < 1) throw UsageError("matrix rank must be >= 1");
  a_.assign(r, std::vector<Polynomial>(r));
  for (int i = 0; i < r; ++i) a_[i][i] = Polynomial(1);
}

const Polynomial& MatrixElement::entry(int i, int j) const {
  if (i < 1 || i > r_ || j < 1 || j > r_) throw UsageError("matrix index out of range");
  return a_[i - 1][j - 1];
}

void MatrixElement::set_entry(int i, int j, Polynomial v) {
  if (i < 1 || i > r_ || j < 1 || j > r_) throw UsageError("matrix index out of range");
  a_[i - 1][j - 1] = std::move(v);
}

MatrixElement MatrixElement::operator*(const MatrixElement& o) const {
  if (r_ != o.r_) throw UsageError("matrix size mismatch");
  MatrixElement out(r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) {
      Polynomial s;
      for (int k = 0; k < r_; ++k) s += a_[i][k] * o.a_[k][j];
      out.a_[i][j] = s;
    }
  return out;
}

bool MatrixElement::numeric() const {
  for (auto& row : a_)
    for (auto& e : row)
      if (!e.is_constant()) return false;
  return true;
}

Rational MatrixElement::det_numeric() const {
  if (!numeric()) throw UsageError("determinant of a symbolic matrix");
  std::vector<std::vector<Rational>> m(r_, std::vector<Rational>(r_));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) m[i][j] = a_[i][j].constant_value();
  Rational det = 1;
  for (int col = 0; col < r_; ++col) {
    int piv = -1;
    for (int row = col; row < r_; ++row)
      if (m[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int row = col + 1; row < r_; ++row) {
      if (m[row][col] == 0) continue;
      Rational f = m[row][col] / m[col][col];
      for (int j = col; j < r_; ++j) m[row][j] -= f * m[col][j];
    }
  }
  return det;
}

MatrixElement symbolic_unipotent(int r) {
  MatrixElement u(r);
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) u.set_entry(i, j, Polynomial::var(VarRef::g(i, j)));
  return u;
}

MatrixElement symbolic_full(int r) {
  MatrixElement g(r);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) g.set_entry(i, j, Polynomial::var(VarRef::g(i, j)));
  return g;
}

MatrixElement permutation_matrix(const Permutation& q) {
  int r = static_cast<int>(q.size());
  std::vector<bool> seen(r, false);
  for (int v : q) {
    if (v < 1 || v > r || seen[v - 1]) throw UsageError("not a permutation of 1..r");
    seen[v - 1] = true;
  }
  MatrixElement p(r);
  for (int i = 1; i <= r; ++i) p.set_entry(i, i, Polynomial(0));
  // Column i carries x_i to x_{q(i)}.
  for (int i = 1; i <= r; ++i) p.set_entry(q[i - 1], i, Polynomial(1));
  return p;
}

MatrixElement lower_unipotent(int r, const std::map<std::pair<int, int>, Rational>& entries) {
  MatrixElement m(r);
  for (auto& [pos, val] : entries) {
    auto [i, j] = pos;
    if (i <= j) throw UsageError("lower unipotent entry must sit strictly below the diagonal");
    m.set_entry(i, j, Polynomial(val));
  }
  return m;
}

Rational pair_value(const Covector& omega, const Character& chi) {
  if (omega.size() != chi.size()) throw UsageError("covector/character length mismatch");
  Rational v = 0;
  for (size_t k = 0; k < omega.size(); ++k) v += omega[k] * Rational(chi[k]);
  return v;
}

Polynomial act_on_poly(const MatrixElement& g, const Polynomial& p) {
  if (p.max_x_index() > g.size()) throw UsageError("polynomial uses x beyond matrix rank");
  std::map<VarRef, Polynomial> sub;
  for (int i = 1; i <= g.size(); ++i) {
    Polynomial image;
    for (int j = 1; j <= g.size(); ++j) image += g.entry(j, i) * Polynomial::var(VarRef::x(j));
    sub[VarRef::x(i)] = image;
  }
  return p.substitute(sub);
}

ExteriorVector act_on_exterior(const MatrixElement& g, const ExteriorVector& v) {
  if (g.size() != v.r()) throw UsageError("matrix rank does not match ambient");
  ExteriorVector out(v.r(), v.d(), v.b());
  // One action per distinct factor monomial; wedges reuse the images.
  std::map<Monomial, Polynomial, LexGreater> images;
  for (auto& [w, c] : v.coords())
    for (auto& m : w.factors())
      if (!images.count(m)) images.emplace(m, act_on_poly(g, Polynomial::term(1, m)));
  for (auto& [w, c] : v.coords()) {
    std::vector<Polynomial> factors;
    factors.reserve(w.factors().size());
    for (auto& m : w.factors()) factors.push_back(images.at(m));
    out = out + wedge_from_factors(factors, v.r(), v.d()).scaled(c);
  }
  return out;
}

std::set<Character> state(const ExteriorVector& v) {
  if (!v.numeric()) throw UsageError("state of a vector with symbolic coordinates");
  if (v.is_zero()) throw UsageError("state of the zero vector");
  std::set<Character> out;
  for (auto& [w, c] : v.coords()) out.insert(weight_of(w, v.r()));
  return out;
}

}  // namespace gitstate
