#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace gitstate {

// Two-sorted variable universe: ambient coordinates x_i and matrix entries g_ij.
// operator< is the precedence order shared by both monomial orders:
// x_1 < x_2 < ... < g_11 < g_12 < ... < g_21 < ...  (smaller = more significant).
struct VarRef {
  enum Sort : std::uint8_t { X = 0, G = 1 };

  Sort sort = X;
  int i = 1;  // x index, or g row
  int j = 0;  // g column; 0 for x variables

  static VarRef x(int i);
  static VarRef g(int i, int j);

  bool is_x() const { return sort == X; }
  bool is_g() const { return sort == G; }

  auto operator<=>(const VarRef&) const = default;

  std::string str() const;  // "x_3", "g_1_2"
};

}  // namespace gitstate
