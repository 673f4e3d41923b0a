#include "gitstate/unipoly.hpp"

#include <cctype>

#include "gitstate/combinat.hpp"
#include "gitstate/errors.hpp"

namespace gitstate {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& v) { return UniPoly({v}); }

UniPoly UniPoly::t() { return UniPoly({0, 1}); }

UniPoly UniPoly::binomial_t(long long shift, long long a) {
  if (a < 0) throw UsageError("binomial_t with negative lower index");
  UniPoly p = constant(1);
  for (long long k = 0; k < a; ++k) p = p * UniPoly({Rational(shift - k), 1});
  Rational inv(1, factorial(a));
  std::vector<Rational> c = p.c_;
  for (auto& x : c) x *= inv;
  return UniPoly(std::move(c));
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

Rational UniPoly::leading() const {
  if (c_.empty()) throw UsageError("leading coefficient of zero polynomial");
  return c_.back();
}

Rational UniPoly::eval(const Rational& x) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t k = 0; k < c.size(); ++k) c[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t k = 0; k < c.size(); ++k) c[k] = coeff(static_cast<int>(k)) - o.coeff(static_cast<int>(k));
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UniPoly();
  std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t a = 0; a < c_.size(); ++a)
    for (size_t b = 0; b < o.c_.size(); ++b) c[a + b] += c_[a] * o.c_[b];
  return UniPoly(std::move(c));
}

std::string UniPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    Rational a = c_[k];
    if (a == 0) continue;
    if (s.empty()) {
      if (a < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (k == 0) {
      s += rational_str(a);
    } else {
      std::string tpart = k == 1 ? "t" : "t^" + std::to_string(k);
      s += a == 1 ? tpart : rational_str(a) + "*" + tpart;
    }
  }
  return s;
}

namespace {

struct TCursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw UsageError("t-polynomial parse error: " + what + " in \"" + s + "\"");
  }
  long long integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stoll(s.substr(start, pos - start));
  }

  UniPoly term() {
    Rational coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Rational(integer());
      if (eat('/')) {
        long long den = integer();
        if (den == 0) fail("zero denominator");
        coeff /= den;
      }
      have_coeff = true;
      if (!eat('*')) return UniPoly::constant(coeff);
    }
    if (peek() != 't') {
      if (have_coeff) fail("expected t after '*'");
      fail("expected coefficient or t");
    }
    ++pos;
    int e = 1;
    if (eat('^')) e = static_cast<int>(integer());
    std::vector<Rational> c(e + 1, Rational(0));
    c[e] = coeff;
    return UniPoly(std::move(c));
  }
};

}  // namespace

UniPoly parse_unipoly(const std::string& text) {
  TCursor c{text};
  if (c.done()) throw UsageError("empty t-polynomial text");
  UniPoly p;
  bool neg = false;
  if (c.eat('-'))
    neg = true;
  else
    c.eat('+');
  while (true) {
    UniPoly t = c.term();
    p = neg ? p - t : p + t;
    if (c.done()) break;
    if (c.eat('-'))
      neg = true;
    else if (c.eat('+'))
      neg = false;
    else
      c.fail("expected '+' or '-'");
  }
  return p;
}

}  // namespace gitstate
