#include "gitstate/decision.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "gitstate/combinat.hpp"
#include "gitstate/simplex.hpp"

namespace gitstate {

XiPoint xi_point(int d, int b, int r) {
  if (r < 1) throw UsageError("rank must be at least 1");
  if (d < 1 || b < 1) throw UsageError("degree and wedge size must be at least 1");
  Rational value(Int(d) * b, Int(r));
  return XiPoint(static_cast<size_t>(r), value);
}

bool in_hull(const std::set<Character>& weights, const XiPoint& xi) {
  if (weights.empty()) throw UsageError("hull of an empty weight set");
  const size_t r = xi.size();
  for (const auto& w : weights)
    if (w.size() != r) throw UsageError("weight length differs from the point");
  // Columns are weights; the extra all-ones row forces a convex combination.
  std::vector<std::vector<Rational>> A(r + 1, std::vector<Rational>(weights.size()));
  std::vector<Rational> b(r + 1);
  size_t col = 0;
  for (const auto& w : weights) {
    for (size_t i = 0; i < r; ++i) A[i][col] = Rational(w[i]);
    A[r][col] = 1;
    ++col;
  }
  for (size_t i = 0; i < r; ++i) b[i] = xi[i];
  b[r] = 1;
  return feasible_nonneg(A, b);
}

Ideal coefficient_ideal(const ExteriorVector& v, const std::set<Character>& C) {
  if (C.empty()) throw UsageError("empty character set");
  if (!v.numeric()) throw UsageError("point must have rational coordinates");
  const int r = v.r();
  const int d = v.d();
  const int b = v.b();
  for (const auto& chi : C)
    if (static_cast<int>(chi.size()) != r)
      throw UsageError("character length differs from the rank");

  MatrixElement u = symbolic_unipotent(r);
  std::map<Monomial, Polynomial, LexGreater> image;
  for (const auto& [w, c] : v.coords()) {
    for (const auto& f : w.factors()) {
      if (!image.count(f))
        image.emplace(f, act_on_poly(u, Polynomial::term(Rational(1), f)));
    }
  }

  std::vector<Polynomial> gens;
  for (const auto& target : wedge_basis(r, d, b)) {
    if (!C.count(weight_of(target, r))) continue;
    Polynomial gen;
    for (const auto& [w, c] : v.coords()) {
      std::vector<std::vector<Polynomial>> mat(
          static_cast<size_t>(b), std::vector<Polynomial>(static_cast<size_t>(b)));
      for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j)
          mat[static_cast<size_t>(i)][static_cast<size_t>(j)] =
              image.at(w.factors()[static_cast<size_t>(i)])
                  .coefficient_at_x(target.factors()[static_cast<size_t>(j)]);
      gen += poly_det(mat) * c;
    }
    gens.push_back(std::move(gen));
  }
  return Ideal(std::move(gens));
}

SolveResult solve_sc(const SCInstance& inst, const Deadline& deadline) {
  Ideal ideal = coefficient_ideal(inst.point, {inst.character});
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::Lex, deadline);
  return SolveResult{!contains_one(gb), std::move(gb)};
}

SolveResult solve_esc(const ESCInstance& inst, const Deadline& deadline) {
  std::set<Character> C(inst.characters.begin(), inst.characters.end());
  Ideal ideal = coefficient_ideal(inst.point, C);
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::Lex, deadline);
  return SolveResult{!contains_one(gb), std::move(gb)};
}

namespace {

// Primitive integer vector parallel to a rational one; empty when zero.
std::vector<Rational> primitive(const std::vector<Rational>& v) {
  Int scale = 1;
  for (const auto& q : v) scale = lcm(scale, denominator(q));
  std::vector<Int> ints;
  ints.reserve(v.size());
  Int g = 0;
  for (const auto& q : v) {
    Int n = numerator(q) * (scale / denominator(q));
    ints.push_back(n);
    g = gcd(g, n);
  }
  if (g == 0) return {};
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& n : ints) out.emplace_back(n / g);
  return out;
}

// One-dimensional kernel of a full-row-rank (r-1) x r matrix, or empty.
std::vector<Rational> kernel_vector(std::vector<std::vector<Rational>> m, size_t r) {
  std::vector<size_t> pivot_col(m.size(), r);
  size_t row = 0;
  for (size_t col = 0; col < r && row < m.size(); ++col) {
    size_t sel = m.size();
    for (size_t i = row; i < m.size(); ++i) {
      if (m[i][col] != 0) {
        sel = i;
        break;
      }
    }
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = m[row][col];
    for (size_t j = col; j < r; ++j) m[row][j] /= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (size_t j = col; j < r; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col[row] = col;
    ++row;
  }
  if (row != m.size()) return {};  // rank deficient

  std::vector<bool> is_pivot(r, false);
  for (size_t i = 0; i < m.size(); ++i) is_pivot[pivot_col[i]] = true;
  size_t free_col = r;
  for (size_t j = 0; j < r; ++j) {
    if (!is_pivot[j]) {
      free_col = j;
      break;
    }
  }
  std::vector<Rational> kv(r, Rational(0));
  kv[free_col] = 1;
  for (size_t i = 0; i < m.size(); ++i) kv[pivot_col[i]] = -m[i][free_col];
  return kv;
}

Rational dot(const Covector& omega, const XiPoint& p) {
  Rational s(0);
  for (size_t i = 0; i < omega.size(); ++i) s += omega[i] * p[i];
  return s;
}

}  // namespace

std::vector<Covector> candidate_covectors(int r, int d, int b) {
  if (r < 1) throw UsageError("rank must be at least 1");
  std::set<Covector> out;
  if (r < 2) return {};
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      if (i == j) continue;
      Covector e(static_cast<size_t>(r), Rational(0));
      e[static_cast<size_t>(i - 1)] = 1;
      e[static_cast<size_t>(j - 1)] = -1;
      out.insert(std::move(e));
    }
  }

  std::set<Character> wset;
  for (const auto& w : wedge_basis(r, d, b)) wset.insert(weight_of(w, r));
  std::vector<Character> W(wset.begin(), wset.end());

  const size_t k = static_cast<size_t>(r - 1);
  if (W.size() >= k) {
    std::vector<size_t> idx(k);
    for (size_t t = 0; t < k; ++t) idx[t] = t;
    for (;;) {
      std::vector<std::vector<Rational>> m;
      m.emplace_back(static_cast<size_t>(r), Rational(1));
      for (size_t t = 1; t < k; ++t) {
        std::vector<Rational> diff(static_cast<size_t>(r));
        for (int c = 0; c < r; ++c)
          diff[static_cast<size_t>(c)] = Rational(
              W[idx[t]][static_cast<size_t>(c)] - W[idx[0]][static_cast<size_t>(c)]);
        m.push_back(std::move(diff));
      }
      auto kv = kernel_vector(std::move(m), static_cast<size_t>(r));
      if (!kv.empty()) {
        auto p = primitive(kv);
        if (!p.empty()) {
          out.insert(p);
          for (auto& q : p) q = -q;
          out.insert(std::move(p));
        }
      }
      // next combination
      size_t t = k;
      while (t > 0 && idx[t - 1] == W.size() - k + (t - 1)) --t;
      if (t == 0) break;
      ++idx[t - 1];
      for (size_t s = t; s < k; ++s) idx[s] = idx[s - 1] + 1;
    }
  }
  return std::vector<Covector>(out.begin(), out.end());
}

Verdict is_semistable(const ExteriorVector& v, int jobs, const Deadline& deadline) {
  if (!v.numeric()) throw UsageError("point must have rational coordinates");
  if (v.is_zero()) throw UsageError("point must be nonzero");
  if (jobs < 1) throw UsageError("jobs must be at least 1");
  const int r = v.r();
  const int d = v.d();
  const int b = v.b();
  const XiPoint xi = xi_point(d, b, r);

  std::set<Character> wset;
  for (const auto& w : wedge_basis(r, d, b)) wset.insert(weight_of(w, r));

  const std::vector<Covector> omegas = candidate_covectors(r, d, b);
  std::vector<Permutation> perms;
  {
    Permutation q(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) q[static_cast<size_t>(i)] = i + 1;
    do {
      perms.push_back(q);
    } while (std::next_permutation(q.begin(), q.end()));
  }

  const long long total =
      static_cast<long long>(perms.size()) * static_cast<long long>(omegas.size());
  if (total == 0) return Verdict{true, std::nullopt, 0};

  // Each weight orbit under the permutation group averages to xi, so some
  // weight always falls on the low side of any covector.
  std::vector<std::set<Character>> cuts;
  cuts.reserve(omegas.size());
  for (const auto& omega : omegas) {
    Rational level = dot(omega, xi);
    std::set<Character> cut;
    for (const auto& chi : wset)
      if (pair_value(omega, chi) <= level) cut.insert(chi);
    if (cut.empty()) throw std::logic_error("empty weight cut");
    cuts.push_back(std::move(cut));
  }

  std::vector<ExteriorVector> qv;
  qv.reserve(perms.size());
  for (const auto& q : perms) qv.push_back(act_on_exterior(permutation_matrix(q), v));

  const long long width = static_cast<long long>(omegas.size());
  auto attempt = [&](long long index) -> std::optional<GroebnerBasis> {
    const auto& point = qv[static_cast<size_t>(index / width)];
    const auto& cut = cuts[static_cast<size_t>(index % width)];
    Ideal ideal = coefficient_ideal(point, cut);
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::Lex, deadline);
    if (contains_one(gb)) return std::nullopt;
    return gb;
  };
  auto verdict_at = [&](long long index, GroebnerBasis gb) {
    return Verdict{false,
                   Certificate{perms[static_cast<size_t>(index / width)],
                               omegas[static_cast<size_t>(index % width)], std::move(gb)},
                   index + 1};
  };

  if (jobs == 1 || total == 1) {
    for (long long index = 0; index < total; ++index) {
      check_deadline(deadline, "semistability search");
      if (auto gb = attempt(index)) return verdict_at(index, std::move(*gb));
    }
    return Verdict{true, std::nullopt, total};
  }

  const int workers = static_cast<int>(std::min<long long>(jobs, total));
  std::mutex mu;
  long long best = total;
  std::map<long long, GroebnerBasis> found;
  std::exception_ptr failure;
  auto body = [&](int self) {
    try {
      for (long long index = self; index < total; index += workers) {
        {
          std::lock_guard<std::mutex> lock(mu);
          if (index >= best || failure) return;
        }
        auto gb = attempt(index);
        std::lock_guard<std::mutex> lock(mu);
        if (gb && index < best) {
          best = index;
          found.emplace(index, std::move(*gb));
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(body, t);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  if (best < total) return verdict_at(best, std::move(found.at(best)));
  return Verdict{true, std::nullopt, total};
}

bool delta_contains_xi(const ExteriorVector& v, const MatrixElement& g) {
  if (!g.numeric()) throw UsageError("group element must be numeric");
  if (g.det_numeric() == 0) throw UsageError("group element must be invertible");
  ExteriorVector gv = act_on_exterior(g, v);
  return in_hull(state(gv), xi_point(v.d(), v.b(), v.r()));
}

ExteriorVector hilbert_point(const std::vector<Polynomial>& gens, int r, int d) {
  if (r < 1) throw UsageError("rank must be at least 1");
  if (d < 0) throw UsageError("degree must be nonnegative");
  if (gens.empty()) throw UsageError("ideal needs at least one generator");
  std::vector<Polynomial> active;
  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    if (f.uses_g()) throw UsageError("generators must not use group variables");
    if (f.max_x_index() > r)
      throw UsageError("generator uses a variable beyond x_" + std::to_string(r));
    if (!f.is_x_homogeneous(f.degree()))
      throw UsageError("generators must be homogeneous");
    if (f.degree() > d) throw UsageError("generator degree exceeds the target degree");
    active.push_back(f);
  }
  const auto cols = monomials_of_degree(r, d);
  std::map<Monomial, size_t, LexGreater> col_of;
  for (size_t j = 0; j < cols.size(); ++j) col_of.emplace(cols[j], j);

  std::vector<std::vector<Rational>> rows;
  for (const auto& f : active) {
    for (const auto& m : monomials_of_degree(r, d - f.degree())) {
      Polynomial p = Polynomial::term(Rational(1), m) * f;
      std::vector<Rational> row(cols.size(), Rational(0));
      for (const auto& [mon, c] : p.terms()) row[col_of.at(mon)] = c;
      rows.push_back(std::move(row));
    }
  }

  // Exact RREF; surviving rows are the canonical basis of the degree piece.
  size_t rank = 0;
  for (size_t col = 0; col < cols.size() && rank < rows.size(); ++col) {
    size_t sel = rows.size();
    for (size_t i = rank; i < rows.size(); ++i) {
      if (rows[i][col] != 0) {
        sel = i;
        break;
      }
    }
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    Rational inv = rows[rank][col];
    for (size_t j = col; j < cols.size(); ++j) rows[rank][j] /= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      for (size_t j = col; j < cols.size(); ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  if (rank == 0) throw UsageError("degree piece of the ideal is zero");

  std::vector<Polynomial> basis;
  basis.reserve(rank);
  for (size_t i = 0; i < rank; ++i) {
    Polynomial p;
    for (size_t j = 0; j < cols.size(); ++j)
      if (rows[i][j] != 0) p += Polynomial::term(rows[i][j], cols[j]);
    basis.push_back(std::move(p));
  }
  return wedge_from_factors(basis, r, d);
}

Int q_of_d(const UniPoly& P, int r, int d) {
  if (r < 1) throw UsageError("rank must be at least 1");
  if (d < 0) throw UsageError("degree must be nonnegative");
  Rational value = P.eval(Rational(d));
  if (!is_integer(value)) throw UsageError("polynomial is not integer-valued at the degree");
  Int q = binomial(r + d - 1, d) - numerator(value);
  if (q <= 0) throw UsageError("degree piece has no positive dimension");
  return q;
}

long long gotzmann_number(const UniPoly& P) {
  if (P.is_zero()) throw UsageError("zero polynomial has no decomposition");
  UniPoly phi = P;
  long long s = 0;
  while (!phi.is_zero()) {
    ++s;
    if (s > 200000) throw UsageError("decomposition does not terminate");
    if (phi.leading() < 0)
      throw UsageError("polynomial is not a Hilbert polynomial");
    int a = phi.degree();
    phi = phi - UniPoly::binomial_t(a - static_cast<int>(s) + 1, a);
  }
  return s;
}

}  // namespace gitstate
