#include "gitstate/polynomial.hpp"

#include "gitstate/errors.hpp"

namespace gitstate {

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_[Monomial{}] = c;
}

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
  Polynomial p;
  if (c != 0) p.terms_[m] = c;
  return p;
}

Polynomial Polynomial::var(VarRef v, int exp) {
  return term(1, Monomial::var(v, exp));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw UsageError("constant_value on a non-constant polynomial");
  return terms_.begin()->second;
}

int Polynomial::degree() const {
  int d = 0;
  for (auto& [m, c] : terms_)
    if (m.degree() > d) d = m.degree();
  return d;
}

int Polynomial::x_degree() const {
  int d = 0;
  for (auto& [m, c] : terms_)
    if (m.x_degree() > d) d = m.x_degree();
  return d;
}

bool Polynomial::uses_x() const {
  for (auto& [m, c] : terms_)
    if (m.x_degree() > 0) return true;
  return false;
}

bool Polynomial::uses_g() const {
  for (auto& [m, c] : terms_)
    if (m.g_degree() > 0) return true;
  return false;
}

int Polynomial::max_x_index() const {
  int r = 0;
  for (auto& [m, c] : terms_)
    if (m.max_x_index() > r) r = m.max_x_index();
  return r;
}

bool Polynomial::is_x_homogeneous(int d) const {
  for (auto& [m, c] : terms_)
    if (m.x_degree() != d) return false;
  return true;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::coefficient_at_x(const Monomial& xm) const {
  Polynomial out;
  for (auto& [m, c] : terms_)
    if (m.x_part() == xm) out.add_term(m.g_part(), c);
  return out;
}

std::map<Monomial, Polynomial, LexGreater> Polynomial::group_by_x() const {
  std::map<Monomial, Polynomial, LexGreater> out;
  for (auto& [m, c] : terms_) out[m.x_part()].add_term(m.g_part(), c);
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_[m] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  for (auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial out = *this;
  for (auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out;
  if (c == 0) return out;
  for (auto& [m, k] : terms_) out.terms_[m] = k * c;
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw UsageError("negative polynomial power");
  Polynomial out(1);
  for (int k = 0; k < e; ++k) out = out * *this;
  return out;
}

std::pair<Monomial, Rational> Polynomial::leading_term(MonomialOrder ord) const {
  if (terms_.empty()) throw UsageError("leading term of zero polynomial");
  if (ord == MonomialOrder::Lex) return *terms_.begin();
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (Monomial::cmp(it->first, best->first, ord) > 0) best = it;
  return *best;
}

Monomial Polynomial::leading_monomial(MonomialOrder ord) const {
  return leading_term(ord).first;
}

Polynomial Polynomial::substitute(const std::map<VarRef, Polynomial>& assignment) const {
  Polynomial out;
  for (auto& [m, c] : terms_) {
    Polynomial f(c);
    for (auto& [v, e] : m.exponents()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        f = f * Polynomial::var(v, e);
      } else {
        f = f * it->second.pow(e);
      }
    }
    out += f;
  }
  return out;
}

Polynomial Polynomial::derivative(VarRef v, int order) const {
  if (order < 0) throw UsageError("negative derivative order");
  Polynomial cur = *this;
  for (int k = 0; k < order; ++k) {
    Polynomial next;
    for (auto& [m, c] : cur.terms_) {
      int e = m.exponent(v);
      if (e == 0) continue;
      next.add_term(m / Monomial::var(v), c * e);
    }
    cur = next;
  }
  return cur;
}

std::set<VarRef> Polynomial::variables() const {
  std::set<VarRef> out;
  for (auto& [m, c] : terms_)
    for (auto& [v, e] : m.exponents()) out.insert(v);
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto& [m, c] : terms_) {
    Rational a = c;
    if (s.empty()) {
      if (a < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (m.is_one()) {
      s += rational_str(a);
    } else if (a == 1) {
      s += m.str();
    } else {
      s += rational_str(a) + "*" + m.str();
    }
  }
  return s;
}

}  // namespace gitstate
