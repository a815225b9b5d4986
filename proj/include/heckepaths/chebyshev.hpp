#pragma once

#include <vector>

namespace hk {

// Chebyshev polynomials of the second kind, written P_l to keep the letter U
// free for the algebra generators.  Extended below the usual range by
// P_{-1} = 0, P_{-2} = -1, so that beta*P_l = P_{l+1} + P_{l-1} holds there too.

/// P_l(beta) by the three-term recurrence; l >= -2.
double cheb_eval(int l, double beta);

/// Monomial coefficients of P_m, ascending in powers of beta (size m+1);
/// coefficient of beta^{m-2p} is (-1)^p * binom(m-p, p).
std::vector<long long> cheb_coeffs(int m);

}  // namespace hk
