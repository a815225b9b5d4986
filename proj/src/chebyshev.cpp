#include "heckepaths/chebyshev.hpp"

#include <stdexcept>

namespace hk {

double cheb_eval(int l, double beta) {
  if (l < -2) throw std::invalid_argument("cheb_eval: l must be >= -2");
  if (l == -2) return -1.0;
  if (l == -1) return 0.0;
  double pm = 0.0, p = 1.0;  // P_{-1}, P_0
  for (int i = 0; i < l; ++i) {
    double next = beta * p - pm;
    pm = p;
    p = next;
  }
  return p;
}

namespace {
long long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  long long r = 1;
  for (int j = 1; j <= b; ++j) r = r * (a - b + j) / j;
  return r;
}
}  // namespace

std::vector<long long> cheb_coeffs(int m) {
  if (m < 0) throw std::invalid_argument("cheb_coeffs: m must be >= 0");
  std::vector<long long> c(m + 1, 0);
  for (int p = 0; 2 * p <= m; ++p)
    c[m - 2 * p] = (p % 2 == 0) ? binom(m - p, p) : -binom(m - p, p);
  return c;
}

}  // namespace hk
