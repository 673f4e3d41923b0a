#include "gitstate/monomial.hpp"

#include "gitstate/errors.hpp"

namespace gitstate {

Monomial Monomial::var(VarRef v, int exp) {
  if (exp < 0) throw UsageError("negative exponent");
  Monomial m;
  if (exp > 0) m.exps_[v] = exp;
  return m;
}

int Monomial::exponent(VarRef v) const {
  auto it = exps_.find(v);
  return it == exps_.end() ? 0 : it->second;
}

int Monomial::degree() const {
  int d = 0;
  for (auto& [v, e] : exps_) d += e;
  return d;
}

int Monomial::x_degree() const {
  int d = 0;
  for (auto& [v, e] : exps_)
    if (v.is_x()) d += e;
  return d;
}

int Monomial::g_degree() const { return degree() - x_degree(); }

Monomial Monomial::x_part() const {
  Monomial m;
  for (auto& [v, e] : exps_)
    if (v.is_x()) m.exps_[v] = e;
  return m;
}

Monomial Monomial::g_part() const {
  Monomial m;
  for (auto& [v, e] : exps_)
    if (v.is_g()) m.exps_[v] = e;
  return m;
}

int Monomial::max_x_index() const {
  int r = 0;
  for (auto& [v, e] : exps_)
    if (v.is_x() && v.i > r) r = v.i;
  return r;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m = *this;
  for (auto& [v, e] : o.exps_) m.exps_[v] += e;
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  for (auto& [v, e] : exps_)
    if (o.exponent(v) < e) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  for (auto& [v, e] : exps_) {
    int d = e - o.exponent(v);
    if (d < 0) throw UsageError("monomial division with remainder");
    if (d > 0) m.exps_[v] = d;
  }
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (auto& [v, e] : b.exps_) {
    int& cur = m.exps_[v];
    if (e > cur) cur = e;
  }
  return m;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (auto& [v, e] : a.exps_)
    if (b.exponent(v) > 0) return false;
  return true;
}

std::strong_ordering Monomial::cmp(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  if (ord == MonomialOrder::GrevLex) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    // Reverse-lex tiebreak: walk from the least significant variable; at the
    // first difference the monomial with the smaller exponent is greater.
    auto ia = a.exps_.rbegin(), ib = b.exps_.rbegin();
    while (ia != a.exps_.rend() || ib != b.exps_.rend()) {
      if (ia == a.exps_.rend()) return std::strong_ordering::greater;
      if (ib == b.exps_.rend()) return std::strong_ordering::less;
      if (ia->first != ib->first) {
        // The side owning the less significant variable has nonzero exponent there.
        return ia->first > ib->first ? std::strong_ordering::less : std::strong_ordering::greater;
      }
      if (ia->second != ib->second) return ib->second <=> ia->second;
      ++ia, ++ib;
    }
    return std::strong_ordering::equal;
  }
  // Lex: walk from the most significant variable; bigger exponent first wins.
  auto ia = a.exps_.begin(), ib = b.exps_.begin();
  while (ia != a.exps_.end() || ib != b.exps_.end()) {
    if (ia == a.exps_.end()) return std::strong_ordering::less;
    if (ib == b.exps_.end()) return std::strong_ordering::greater;
    if (ia->first != ib->first) {
      return ia->first < ib->first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (ia->second != ib->second) return ia->second <=> ib->second;
    ++ia, ++ib;
  }
  return std::strong_ordering::equal;
}

std::string Monomial::str() const {
  if (exps_.empty()) return "1";
  std::string s;
  for (auto& [v, e] : exps_) {
    if (!s.empty()) s += "*";
    s += v.str();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace gitstate
