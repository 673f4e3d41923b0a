#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace gitstate {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "n" or "n/d" with an optional leading sign on either part; d != 0.
Rational parse_rational(const std::string& s);

// "p/q" with q > 1, plain "p" otherwise; always lowest terms.
std::string rational_str(const Rational& r);

std::string int_str(const Int& n);

bool is_integer(const Rational& r);

}  // namespace gitstate
