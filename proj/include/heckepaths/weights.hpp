#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hk {

/// Rank/level data for U_q sl(k) at q = exp(i*pi/n).
struct RankLevel {
  int k = 2;  // rank parameter, sl(k)
  int n = 4;  // cutoff, level is n-k

  RankLevel() = default;
  RankLevel(int k_, int n_) : k(k_), n(n_) {
    if (k < 2) throw std::invalid_argument("RankLevel: k must be >= 2");
    if (n < k + 1) throw std::invalid_argument("RankLevel: n must be >= k+1");
  }

  double beta() const { return 2.0 * std::cos(M_PI / n); }
  std::complex<double> q() const {
    return {std::cos(M_PI / n), std::sin(M_PI / n)};
  }
  /// sin(pi*m/n)
  double sin_frac(long m) const { return std::sin(M_PI * static_cast<double>(m) / n); }
};

/// Shifted Dynkin labels (lambda_1,...,lambda_{k-1}), all >= 1.
using Weight = std::vector<int>;

/// Young-diagram row lengths, weakly decreasing, positive.
using Partition = std::vector<int>;

bool admissible(const RankLevel& rl, const Weight& w);

/// All admissible weights in lexicographic order; size = binom(n-1, k-1).
std::vector<Weight> enumerate_weights(const RankLevel& rl);

/// Identity weight (1,...,1).
Weight unit_weight(const RankLevel& rl);

/// Integer pairing (e_alpha - e_beta, b), alpha,beta in 1..k.
int pair_e_diff(const RankLevel& rl, int alpha, int beta, const Weight& b);

/// sin(pi * (e_alpha - e_beta, b) / n)
double s_value(const RankLevel& rl, int alpha, int beta, const Weight& b);

/// Shift a weight by e_alpha (alpha in 1..k); nullopt if not admissible.
std::optional<Weight> shift_by_e(const RankLevel& rl, const Weight& w, int alpha);

/// Row lengths of the Young diagram attached to lambda: row_i = sum_{a>=i}(lambda_a - 1).
Partition weight_to_partition(const RankLevel& rl, const Weight& lambda);

/// Delete columns of height exactly k; nullopt if the diagram has a column
/// higher than k (such shapes contribute zero).
std::optional<Partition> reduce_partition(int k, Partition p);

/// Inverse of weight_to_partition after reduction; nullopt if the shape
/// drops out (too many rows) or the resulting weight is not admissible.
std::optional<Weight> partition_to_weight(const RankLevel& rl, const Partition& p);

Partition conjugate_partition(const Partition& p);

}  // namespace hk
