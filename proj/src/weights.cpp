#include "heckepaths/weights.hpp"

#include <algorithm>
#include <numeric>

namespace hk {

bool admissible(const RankLevel& rl, const Weight& w) {
  if (static_cast<int>(w.size()) != rl.k - 1) return false;
  int sum = 0;
  for (int x : w) {
    if (x < 1) return false;
    sum += x;
  }
  return sum <= rl.n - 1;
}

std::vector<Weight> enumerate_weights(const RankLevel& rl) {
  std::vector<Weight> out;
  Weight cur(rl.k - 1, 1);
  // lexicographic DFS over label vectors
  auto rec = [&](auto&& self, int pos, int used) -> void {
    if (pos == rl.k - 1) {
      out.push_back(cur);
      return;
    }
    int rest = rl.k - 1 - pos - 1;  // later labels, each at least 1
    for (int v = 1; used + v + rest <= rl.n - 1; ++v) {
      cur[pos] = v;
      self(self, pos + 1, used + v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

Weight unit_weight(const RankLevel& rl) { return Weight(rl.k - 1, 1); }

int pair_e_diff(const RankLevel& rl, int alpha, int beta, const Weight& b) {
  if (alpha < 1 || alpha > rl.k || beta < 1 || beta > rl.k)
    throw std::out_of_range("pair_e_diff: direction index out of range");
  int sum = 0;
  for (int a = 1; a <= rl.k - 1; ++a)
    sum += b[a - 1] * ((alpha <= a ? 1 : 0) - (beta <= a ? 1 : 0));
  return sum;
}

double s_value(const RankLevel& rl, int alpha, int beta, const Weight& b) {
  return rl.sin_frac(pair_e_diff(rl, alpha, beta, b));
}

std::optional<Weight> shift_by_e(const RankLevel& rl, const Weight& w, int alpha) {
  if (alpha < 1 || alpha > rl.k) throw std::out_of_range("shift_by_e: bad direction");
  Weight v = w;
  // e_1 = Lambda_1, e_a = Lambda_a - Lambda_{a-1}, e_k = -Lambda_{k-1}
  if (alpha <= rl.k - 1) v[alpha - 1] += 1;
  if (alpha >= 2) v[alpha - 2] -= 1;
  if (!admissible(rl, v)) return std::nullopt;
  return v;
}

Partition weight_to_partition(const RankLevel& rl, const Weight& lambda) {
  if (!admissible(rl, lambda))
    throw std::invalid_argument("weight_to_partition: weight not admissible");
  Partition p;
  for (int i = 1; i <= rl.k - 1; ++i) {
    int row = 0;
    for (int a = i; a <= rl.k - 1; ++a) row += lambda[a - 1] - 1;
    if (row > 0) p.push_back(row);
  }
  return p;
}

std::optional<Partition> reduce_partition(int k, Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (static_cast<int>(p.size()) > k) return std::nullopt;
  if (static_cast<int>(p.size()) == k) {
    int d = p.back();
    for (int& r : p) r -= d;
    while (!p.empty() && p.back() == 0) p.pop_back();
  }
  return p;
}

std::optional<Weight> partition_to_weight(const RankLevel& rl, const Partition& p) {
  auto red = reduce_partition(rl.k, p);
  if (!red) return std::nullopt;
  Weight w(rl.k - 1, 1);
  auto row = [&](int i) { return i < static_cast<int>(red->size()) ? (*red)[i] : 0; };
  for (int a = 0; a < rl.k - 1; ++a) w[a] = 1 + row(a) - row(a + 1);
  if (!admissible(rl, w)) return std::nullopt;
  return w;
}

Partition conjugate_partition(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  c.resize(p[0], 0);
  for (int r : p)
    for (int j = 0; j < r; ++j) c[j] += 1;
  return c;
}

}  // namespace hk
