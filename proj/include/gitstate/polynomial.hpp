#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gitstate/monomial.hpp"
#include "gitstate/rational.hpp"

namespace gitstate {

// Sparse exact-rational polynomial over the two-sorted variables.
// Terms are keyed lex-descending; zero coefficients never survive an operation.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, LexGreater>;

  Polynomial() = default;
  Polynomial(const Rational& c);
  Polynomial(long c) : Polynomial(Rational(c)) {}
  Polynomial(int c) : Polynomial(Rational(c)) {}

  static Polynomial term(const Rational& c, const Monomial& m);
  static Polynomial var(VarRef v, int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // pre: is_constant

  int degree() const;    // max total degree; 0 for the zero polynomial
  int x_degree() const;  // max x-degree over terms
  bool uses_x() const;
  bool uses_g() const;
  int max_x_index() const;
  bool is_x_homogeneous(int d) const;  // every term has x_degree == d (zero passes)

  Rational coefficient(const Monomial& m) const;
  // Sum of terms whose x-part equals xm, divided by xm (g-content kept).
  Polynomial coefficient_at_x(const Monomial& xm) const;
  // Coefficients grouped by x-part: xm -> g-polynomial.
  std::map<Monomial, Polynomial, LexGreater> group_by_x() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(int e) const;
  bool operator==(const Polynomial&) const = default;

  std::pair<Monomial, Rational> leading_term(MonomialOrder ord) const;  // pre: nonzero
  Monomial leading_monomial(MonomialOrder ord) const;

  // Simultaneous substitution; variables missing from the assignment stay put.
  Polynomial substitute(const std::map<VarRef, Polynomial>& assignment) const;
  Polynomial derivative(VarRef v, int order = 1) const;

  const TermMap& terms() const { return terms_; }
  std::set<VarRef> variables() const;

  std::string str() const;  // canonical lex-descending text form

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

}  // namespace gitstate
