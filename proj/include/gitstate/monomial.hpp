#pragma once

#include <compare>
#include <map>
#include <string>

#include "gitstate/variable.hpp"

namespace gitstate {

enum class MonomialOrder { Lex, GrevLex };

// Exponent map without zero entries; iteration runs most-significant variable first.
class Monomial {
 public:
  Monomial() = default;

  static Monomial var(VarRef v, int exp = 1);

  int exponent(VarRef v) const;
  int degree() const;
  int x_degree() const;
  int g_degree() const;
  bool is_one() const { return exps_.empty(); }

  Monomial x_part() const;
  Monomial g_part() const;
  int max_x_index() const;  // 0 when no x variable occurs

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // pre: o divides *this
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  static std::strong_ordering cmp(const Monomial& a, const Monomial& b, MonomialOrder ord);
  bool operator==(const Monomial&) const = default;

  const std::map<VarRef, int>& exponents() const { return exps_; }

  std::string str() const;  // "x_1^2*x_2"; "1" for the empty monomial

 private:
  std::map<VarRef, int> exps_;
};

// Comparator putting lex-greater monomials first; used for canonical term order.
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::cmp(a, b, MonomialOrder::Lex) > 0;
  }
};

}  // namespace gitstate
