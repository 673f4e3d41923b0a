#include "gitstate/combinat.hpp"

#include "gitstate/errors.hpp"

namespace gitstate {

Int binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k == 0) return 1;
  Int num = 1, den = 1;
  for (long long t = 0; t < k; ++t) {
    num *= n - t;
    den *= t + 1;
  }
  return num / den;
}

Int factorial(long long n) {
  if (n < 0) throw UsageError("factorial of negative integer");
  Int f = 1;
  for (long long t = 2; t <= n; ++t) f *= t;
  return f;
}

Int falling_factorial(long long top, long long k) {
  if (k < 0 || top < 0 || k > top) throw UsageError("falling_factorial out of range");
  Int f = 1;
  for (long long t = 0; t < k; ++t) f *= top - t;
  return f;
}

namespace {
void fill_monomials(int r, int d, int idx, Monomial acc, std::vector<Monomial>& out) {
  if (idx == r) {
    if (d == 0) out.push_back(acc);
    return;
  }
  if (idx == r - 1) {
    out.push_back(acc * Monomial::var(VarRef::x(r), d));
    return;
  }
  for (int e = d; e >= 0; --e)
    fill_monomials(r, d - e, idx + 1, acc * Monomial::var(VarRef::x(idx + 1), e), out);
}
}  // namespace

std::vector<Monomial> monomials_of_degree(int r, int d) {
  if (r < 1 || d < 0) throw UsageError("monomials_of_degree needs r >= 1, d >= 0");
  std::vector<Monomial> out;
  fill_monomials(r, d, 0, Monomial{}, out);
  return out;
}

}  // namespace gitstate
