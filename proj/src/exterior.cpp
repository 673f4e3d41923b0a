#include "gitstate/exterior.hpp"

#include "gitstate/combinat.hpp"
#include "gitstate/errors.hpp"

namespace gitstate {

WedgeIndex::WedgeIndex(std::vector<Monomial> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw UsageError("empty wedge");
  for (auto& m : factors_) {
    if (m.g_degree() > 0) throw UsageError("wedge factors must be x-monomials");
    if (m.degree() != factors_.front().degree())
      throw UsageError("wedge factors must share one degree");
  }
  for (size_t k = 0; k + 1 < factors_.size(); ++k)
    if (Monomial::cmp(factors_[k], factors_[k + 1], MonomialOrder::Lex) <= 0)
      throw UsageError("wedge factors must strictly decrease in lex order");
}

std::strong_ordering WedgeIndex::cmp(const WedgeIndex& a, const WedgeIndex& b) {
  size_t n = std::min(a.factors_.size(), b.factors_.size());
  for (size_t k = 0; k < n; ++k) {
    auto c = Monomial::cmp(a.factors_[k], b.factors_[k], MonomialOrder::Lex);
    if (c != 0) return c > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.factors_.size() <=> b.factors_.size();
}

std::string WedgeIndex::str() const {
  std::string s;
  for (auto& m : factors_) {
    if (!s.empty()) s += " ^ ";
    s += m.str();
  }
  return s;
}

Character weight_of(const WedgeIndex& w, int r) {
  Character chi(r, 0);
  for (auto& m : w.factors()) {
    if (m.max_x_index() > r) throw UsageError("wedge monomial outside ambient rank");
    for (auto& [v, e] : m.exponents()) chi[v.i - 1] += e;
  }
  return chi;
}

ExteriorVector::ExteriorVector(int r, int d, int b) : r_(r), d_(d), b_(b) {
  if (r < 1 || d < 0 || b < 1) throw UsageError("bad exterior ambient");
}

void ExteriorVector::add_term(const WedgeIndex& w, const Polynomial& coeff) {
  if (w.size() != b_) throw UsageError("wedge size does not match ambient");
  if (coeff.uses_x()) throw UsageError("exterior coordinates must be free of x variables");
  for (auto& m : w.factors()) {
    if (m.x_degree() != d_ || m.max_x_index() > r_)
      throw UsageError("wedge factor outside ambient");
  }
  auto it = coords_.find(w);
  if (it == coords_.end()) {
    if (!coeff.is_zero()) coords_.emplace(w, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) coords_.erase(it);
}

Polynomial ExteriorVector::coord(const WedgeIndex& w) const {
  auto it = coords_.find(w);
  return it == coords_.end() ? Polynomial() : it->second;
}

bool ExteriorVector::numeric() const {
  for (auto& [w, c] : coords_)
    if (!c.is_constant()) return false;
  return true;
}

ExteriorVector ExteriorVector::operator+(const ExteriorVector& o) const {
  if (r_ != o.r_ || d_ != o.d_ || b_ != o.b_) throw UsageError("ambient mismatch in sum");
  ExteriorVector out = *this;
  for (auto& [w, c] : o.coords_) out.add_term(w, c);
  return out;
}

ExteriorVector ExteriorVector::scaled(const Rational& c) const { return scaled(Polynomial(c)); }

ExteriorVector ExteriorVector::scaled(const Polynomial& c) const {
  ExteriorVector out(r_, d_, b_);
  for (auto& [w, k] : coords_) out.add_term(w, k * c);
  return out;
}

std::vector<WedgeIndex> wedge_basis(int r, int d, int b) {
  std::vector<Monomial> mons = monomials_of_degree(r, d);
  int n = static_cast<int>(mons.size());
  if (b < 1 || b > n) throw UsageError("wedge degree out of range for ambient");
  std::vector<WedgeIndex> out;
  std::vector<int> idx(b);
  for (int k = 0; k < b; ++k) idx[k] = k;
  while (true) {
    std::vector<Monomial> tuple;
    tuple.reserve(b);
    for (int k : idx) tuple.push_back(mons[k]);
    out.emplace_back(std::move(tuple));
    int k = b - 1;
    while (k >= 0 && idx[k] == n - b + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int t = k + 1; t < b; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
  size_t n = m.size();
  if (n == 0) throw UsageError("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw UsageError("determinant needs a square matrix");
  if (n == 1) return m[0][0];
  Polynomial det;
  // Laplace expansion along the first row; fine at the small b in play here.
  for (size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    minor.reserve(n - 1);
    for (size_t row = 1; row < n; ++row) {
      std::vector<Polynomial> line;
      line.reserve(n - 1);
      for (size_t c = 0; c < n; ++c)
        if (c != col) line.push_back(m[row][c]);
      minor.push_back(std::move(line));
    }
    Polynomial cof = m[0][col] * poly_det(minor);
    det += (col % 2 == 0) ? cof : -cof;
  }
  return det;
}

ExteriorVector wedge_from_factors(const std::vector<Polynomial>& ps, int r, int d) {
  if (ps.empty()) throw UsageError("wedge of zero factors");
  int b = static_cast<int>(ps.size());
  std::vector<std::map<Monomial, Polynomial, LexGreater>> grouped;
  grouped.reserve(ps.size());
  std::set<Monomial, LexGreater> support;
  for (auto& p : ps) {
    if (!p.is_x_homogeneous(d)) throw UsageError("wedge factor not homogeneous of ambient degree");
    if (p.max_x_index() > r) throw UsageError("wedge factor outside ambient rank");
    grouped.push_back(p.group_by_x());
    for (auto& [m, c] : grouped.back()) support.insert(m);
  }
  ExteriorVector out(r, d, b);
  std::vector<Monomial> mons(support.begin(), support.end());  // lex descending
  int n = static_cast<int>(mons.size());
  if (n < b) return out;  // factors linearly dependent for lack of support
  std::vector<int> idx(b);
  for (int k = 0; k < b; ++k) idx[k] = k;
  while (true) {
    std::vector<std::vector<Polynomial>> mat(b, std::vector<Polynomial>(b));
    for (int row = 0; row < b; ++row)
      for (int col = 0; col < b; ++col) {
        auto it = grouped[row].find(mons[idx[col]]);
        if (it != grouped[row].end()) mat[row][col] = it->second;
      }
    Polynomial det = poly_det(mat);
    if (!det.is_zero()) {
      std::vector<Monomial> tuple;
      tuple.reserve(b);
      for (int k : idx) tuple.push_back(mons[k]);
      out.add_term(WedgeIndex(std::move(tuple)), det);
    }
    int k = b - 1;
    while (k >= 0 && idx[k] == n - b + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int t = k + 1; t < b; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

}  // namespace gitstate
