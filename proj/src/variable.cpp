#include "gitstate/variable.hpp"

#include "gitstate/errors.hpp"

namespace gitstate {

VarRef VarRef::x(int i) {
  if (i < 1) throw UsageError("x variable index must be >= 1");
  return VarRef{X, i, 0};
}

VarRef VarRef::g(int i, int j) {
  if (i < 1 || j < 1) throw UsageError("g variable indices must be >= 1");
  return VarRef{G, i, j};
}

std::string VarRef::str() const {
  if (sort == X) return "x_" + std::to_string(i);
  return "g_" + std::to_string(i) + "_" + std::to_string(j);
}

}  // namespace gitstate
