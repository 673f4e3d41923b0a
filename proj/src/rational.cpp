#include "gitstate/rational.hpp"

#include <cctype>

#include "gitstate/errors.hpp"

namespace gitstate {

namespace {

// Optional sign followed by at least one digit; the big-int constructor alone
// is too lenient (it accepts the empty string as zero).
bool signed_digits(const std::string& s) {
  size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  std::string num_text = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den_text = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!signed_digits(num_text) || !signed_digits(den_text))
    throw UsageError("malformed rational: " + s);
  if (num_text[0] == '+') num_text.erase(0, 1);  // big-int rejects a leading plus
  if (den_text[0] == '+') den_text.erase(0, 1);
  Int num(num_text);
  Int den(den_text);
  if (den == 0) throw UsageError("rational with zero denominator: " + s);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::string rational_str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string int_str(const Int& n) { return n.str(); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace gitstate
