#pragma once

#include <string>
#include <vector>

#include "gitstate/rational.hpp"

namespace gitstate {

// Dense univariate exact-rational polynomial in the formal variable t.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);  // ascending powers; trims zeros
  static UniPoly constant(const Rational& v);
  static UniPoly t();
  // C(t + shift, a) expanded: prod_{k=0}^{a-1} (t + shift - k) / a!
  static UniPoly binomial_t(long long shift, long long a);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Rational coeff(int k) const;
  Rational leading() const;  // pre: nonzero
  Rational eval(const Rational& x) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  bool operator==(const UniPoly&) const = default;

  std::string str() const;  // "6*t - 8", "0"

 private:
  void trim();
  std::vector<Rational> c_;
};

// Same term grammar as the multivariate parser but with the single variable t.
UniPoly parse_unipoly(const std::string& text);

}  // namespace gitstate
