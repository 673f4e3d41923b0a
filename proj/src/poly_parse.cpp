#include "gitstate/poly_parse.hpp"

#include <cctype>

#include "gitstate/errors.hpp"

namespace gitstate {

namespace {

struct Cursor {
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
    throw UsageError("polynomial parse error at offset " + std::to_string(pos) + ": " + what +
                     " in \"" + s + "\"");
  }

  long long integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stoll(s.substr(start, pos - start));
  }

  // x_<i> or g_<i>_<j>
  VarRef variable() {
    char kind = peek();
    ++pos;
    if (!eat('_')) fail("expected '_' after variable letter");
    long long i = integer();
    if (kind == 'x') return VarRef::x(static_cast<int>(i));
    if (!eat('_')) fail("expected second index for g variable");
    long long j = integer();
    return VarRef::g(static_cast<int>(i), static_cast<int>(j));
  }

  Monomial factors() {
    Monomial m;
    while (true) {
      if (peek() != 'x' && peek() != 'g') fail("expected variable");
      VarRef v = variable();
      int e = 1;
      if (eat('^')) e = static_cast<int>(integer());
      m = m * Monomial::var(v, e);
      size_t save = pos;
      if (!eat('*')) break;
      char c = peek();
      if (c != 'x' && c != 'g') {  // '*' belonged to nothing; not part of factors
        pos = save;
        break;
      }
    }
    return m;
  }

  Polynomial term() {
    char c = peek();
    if (c == 'x' || c == 'g') return Polynomial::term(1, factors());
    Rational coeff(integer());
    if (eat('/')) {
      long long den = integer();
      if (den == 0) fail("zero denominator");
      coeff /= den;
    }
    if (eat('*')) return Polynomial::term(coeff, factors());
    return Polynomial(coeff);
  }

  Polynomial poly() {
    Polynomial p;
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    while (true) {
      Polynomial t = term();
      p += neg ? -t : t;
      if (done()) break;
      if (eat('-'))
        neg = true;
      else if (eat('+'))
        neg = false;
      else
        fail("expected '+' or '-'");
    }
    return p;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
  Cursor c{text};
  if (c.done()) throw UsageError("empty polynomial text");
  Polynomial p = c.poly();
  return p;
}

}  // namespace gitstate
