#include "heckepaths/hecke.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstring>
#include <functional>
#include <numeric>

namespace hk {

namespace {

std::string path_key(const std::vector<int>& p) {
  std::string s(p.size() * sizeof(int), '\0');
  std::memcpy(s.data(), p.data(), s.size());
  return s;
}

}  // namespace

FaceWeights::FaceWeights(const GraphRep& g) : g_(&g) {
  const int m = g.size();
  dir_.assign(m, std::vector<int>(m, 0));
  if (g.basic()) {
    for (int a = 0; a < m; ++a)
      for (int alpha = 1; alpha <= g.rl.k; ++alpha) {
        auto shifted = shift_by_e(g.rl, g.vertices[a], alpha);
        if (shifted) dir_[a][g.index_of(*shifted)] = alpha;
      }
  } else {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (g.G[1](a, b)) dir_[a][b] = 1;  // placeholder, unused for ADE
  }
  sins_.resize(2 * g.rl.n + 1);
  for (int t = 0; t <= 2 * g.rl.n; ++t) sins_[t] = g.rl.sin_frac(t);
}

int FaceWeights::direction(int a, int b) const { return dir_[a][b]; }

double FaceWeights::sin_pair(int a_idx, int u, int v) const {
  int p = pair_e_diff(g_->rl, u, v, g_->vertices[a_idx]);
  if (p < 0 || p > 2 * g_->rl.n) return g_->rl.sin_frac(p);
  return sins_[p];
}

double FaceWeights::diamond(int a, int b, int bp, int c) const {
  if (!g_->G[1](a, b) || !g_->G[1](a, bp) || !g_->G[1](b, c) || !g_->G[1](bp, c))
    throw std::invalid_argument("diamond: missing adjacency");
  if (!g_->basic()) {
    if (a != c) return 0.0;
    return std::sqrt(g_->psi(b) * g_->psi(bp)) / g_->psi(a);
  }
  int alpha = dir_[a][b], beta = dir_[b][c];
  if (b == bp) {
    if (alpha == beta) return 0.0;
    int u = std::min(alpha, beta), v = std::max(alpha, beta);
    return sin_pair(b, u, v) / sin_pair(a, u, v);
  }
  int u = std::min(alpha, beta), v = std::max(alpha, beta);
  double prod = sin_pair(b, u, v) * sin_pair(bp, u, v);
  if (prod < 0) {
    if (prod < -1e-12)
      throw std::runtime_error("diamond: negative product under the square root");
    prod = 0.0;
  }
  return std::sqrt(prod) / sin_pair(a, u, v);
}

double FaceWeights::diag(int a, int b, int c) const {
  if (!g_->basic()) return a == c ? g_->psi(b) / g_->psi(a) : 0.0;
  int alpha = dir_[a][b], beta = dir_[b][c];
  if (alpha == beta) return 0.0;
  int u = std::min(alpha, beta), v = std::max(alpha, beta);
  return sin_pair(b, u, v) / sin_pair(a, u, v);
}

int PathSpace::find(const std::vector<int>& path) const {
  auto it = idx.find(path_key(path));
  return it == idx.end() ? -1 : it->second;
}

namespace {

std::size_t walk_count(const GraphRep& g, int a0, int aL, int L) {
  IMat p = IMat::Identity(g.size(), g.size());
  for (int i = 0; i < L; ++i) p = p * g.G[1];
  return static_cast<std::size_t>(p(a0, aL));
}

void enumerate_walks(const GraphRep& g, int a0, int L,
                     const std::function<void(const std::vector<int>&)>& sink) {
  std::vector<int> path(L + 1);
  path[0] = a0;
  auto dfs = [&](auto&& self, int depth) -> void {
    if (depth == L) {
      sink(path);
      return;
    }
    int cur = path[depth];
    for (int b = 0; b < g.size(); ++b)
      if (g.G[1](cur, b)) {
        path[depth + 1] = b;
        self(self, depth + 1);
      }
  };
  dfs(dfs, 0);
}

}  // namespace

PathSpace build_path_space(const GraphRep& g, int a0, int aL, int L, std::size_t cap) {
  if (L < 1) throw std::invalid_argument("build_path_space: L must be >= 1");
  std::size_t d = walk_count(g, a0, aL, L);
  if (d > cap) throw CapExceeded(d, cap);
  PathSpace ps;
  ps.g = &g;
  ps.L = L;
  ps.a0 = a0;
  ps.aL = aL;
  enumerate_walks(g, a0, L, [&](const std::vector<int>& p) {
    if (p[L] != aL) return;
    ps.idx.emplace(path_key(p), static_cast<int>(ps.basis.size()));
    ps.basis.push_back(p);
  });
  return ps;
}

std::vector<PathSpace> build_path_spaces_from(const GraphRep& g, int a0, int L,
                                              std::size_t cap) {
  std::vector<PathSpace> out(g.size());
  for (int aL = 0; aL < g.size(); ++aL) {
    out[aL].g = &g;
    out[aL].L = L;
    out[aL].a0 = a0;
    out[aL].aL = aL;
  }
  std::size_t total = 0;
  enumerate_walks(g, a0, L, [&](const std::vector<int>& p) {
    PathSpace& ps = out[p[L]];
    if (++total > cap) throw CapExceeded(total, cap);
    ps.idx.emplace(path_key(p), static_cast<int>(ps.basis.size()));
    ps.basis.push_back(p);
  });
  return out;
}

template <class T>
Sparse<T> Sparse<T>::identity(int n) {
  Sparse<T> s;
  s.n = n;
  s.rows.resize(n);
  for (int i = 0; i < n; ++i) s.rows[i].push_back({i, T(1)});
  return s;
}

template <class T>
Sparse<T> Sparse<T>::mul(const Sparse<T>& o) const {
  Sparse<T> r;
  r.n = n;
  r.rows.resize(n);
  std::vector<T> acc(n, T(0));
  std::vector<int> touched;
  for (int i = 0; i < n; ++i) {
    touched.clear();
    for (const auto& [j, v] : rows[i])
      for (const auto& [c, w] : o.rows[j]) {
        if (acc[c] == T(0)) touched.push_back(c);
        acc[c] += v * w;
      }
    std::sort(touched.begin(), touched.end());
    for (int c : touched) {
      if (acc[c] != T(0)) r.rows[i].push_back({c, acc[c]});
      acc[c] = T(0);
    }
  }
  return r;
}

template <class T>
T Sparse<T>::get(int r, int c) const {
  const auto& row = rows[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  return (it != row.end() && it->first == c) ? it->second : T(0);
}

template <class T>
double Sparse<T>::max_abs() const {
  double m = 0.0;
  for (const auto& row : rows)
    for (const auto& [c, v] : row) m = std::max(m, std::abs(v));
  return m;
}

template struct Sparse<double>;
template struct Sparse<std::complex<double>>;

SparseC to_complex(const SparseD& a) {
  SparseC r;
  r.n = a.n;
  r.rows.resize(a.n);
  for (int i = 0; i < a.n; ++i)
    for (const auto& [c, v] : a.rows[i]) r.rows[i].push_back({c, {v, 0.0}});
  return r;
}

std::complex<double> pair_trace(const SparseC& a, const SparseC& b) {
  std::complex<double> t = 0.0;
  for (int r = 0; r < a.n; ++r)
    for (const auto& [c, v] : a.rows[r]) t += v * b.get(c, r);
  return t;
}

SparseC axpy(const std::complex<double>& alpha, const SparseC& a,
             const std::complex<double>& beta, const SparseC& b) {
  SparseC r;
  r.n = a.n;
  r.rows.resize(a.n);
  for (int i = 0; i < a.n; ++i) {
    auto ia = a.rows[i].begin(), ea = a.rows[i].end();
    auto ib = b.rows[i].begin(), eb = b.rows[i].end();
    while (ia != ea || ib != eb) {
      int ca = ia != ea ? ia->first : INT_MAX;
      int cb = ib != eb ? ib->first : INT_MAX;
      if (ca < cb) {
        r.rows[i].push_back({ca, alpha * ia->second});
        ++ia;
      } else if (cb < ca) {
        r.rows[i].push_back({cb, beta * ib->second});
        ++ib;
      } else {
        auto v = alpha * ia->second + beta * ib->second;
        if (v != std::complex<double>(0)) r.rows[i].push_back({ca, v});
        ++ia;
        ++ib;
      }
    }
  }
  return r;
}

SparseD build_u(const PathSpace& ps, const FaceWeights& fw, int i) {
  if (i < 1 || i > ps.L - 1) throw std::out_of_range("build_u: index out of range");
  const GraphRep& g = *ps.g;
  SparseD u;
  u.n = ps.dim();
  u.rows.resize(u.n);
  std::vector<std::tuple<int, int, double>> trip;
  std::vector<int> mod;
  for (int col = 0; col < ps.dim(); ++col) {
    const auto& p = ps.basis[col];
    int a = p[i - 1], b = p[i], c = p[i + 1];
    for (int bp = 0; bp < g.size(); ++bp) {
      if (!g.G[1](a, bp) || !g.G[1](bp, c)) continue;
      double w = fw.diamond(a, b, bp, c);
      if (w == 0.0) continue;
      mod = p;
      mod[i] = bp;
      int row = ps.find(mod);
      trip.emplace_back(row, col, w);
    }
  }
  std::sort(trip.begin(), trip.end());
  for (const auto& [r, c, v] : trip) u.rows[r].push_back({c, v});
  return u;
}

SparseC build_g(const PathSpace& ps, const FaceWeights& fw, int i) {
  SparseC gi = to_complex(build_u(ps, fw, i));
  auto q = ps.g->rl.q();
  // g = q*I - U
  for (int r = 0; r < gi.n; ++r) {
    bool diag_seen = false;
    for (auto& [c, v] : gi.rows[r]) {
      v = -v;
      if (c == r) {
        v += q;
        diag_seen = true;
      }
    }
    if (!diag_seen) {
      auto& row = gi.rows[r];
      row.insert(std::lower_bound(row.begin(), row.end(), r,
                                  [](const auto& e, int col) { return e.first < col; }),
                 {r, q});
    }
  }
  return gi;
}

std::vector<int> reduced_word(std::vector<int> perm) {
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 0; j + 1 < static_cast<int>(perm.size()); ++j)
      if (perm[j] > perm[j + 1]) {
        std::swap(perm[j], perm[j + 1]);
        word.push_back(j + 1);
        moved = true;
      }
  }
  return word;
}

std::vector<std::pair<int, int>> endpoint_sample(const GraphRep& g, int L, int max_pairs) {
  IMat p = IMat::Identity(g.size(), g.size());
  for (int i = 0; i < L; ++i) p = p * g.G[1];
  std::vector<std::pair<int, int>> all;
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b)
      if (p(a, b) > 0) all.push_back({a, b});
  if (g.size() <= 12 || static_cast<int>(all.size()) <= max_pairs) return all;
  std::vector<std::pair<int, int>> out;
  double stride = static_cast<double>(all.size()) / max_pairs;
  for (int i = 0; i < max_pairs; ++i) out.push_back(all[static_cast<int>(i * stride)]);
  return out;
}

RelationReport check_hecke_relations(const GraphRep& g, int L, double tol) {
  FaceWeights fw(g);
  const double beta = g.rl.beta();
  RelationReport rep;
  auto note = [&](double resid, int i, int a0, int aL, const char* what) {
    if (resid > rep.max_residual) rep.max_residual = resid;
    if (resid > tol && rep.pass) {
      rep.pass = false;
      rep.detail = std::string(what) + " i=" + std::to_string(i) + " endpoints=(" +
                   std::to_string(a0) + "," + std::to_string(aL) + ")";
    }
  };
  for (auto [a0, aL] : endpoint_sample(g, L)) {
    PathSpace ps = build_path_space(g, a0, aL, L);
    if (ps.dim() == 0) continue;
    std::vector<SparseD> U;
    std::vector<SparseC> G;
    for (int i = 1; i <= L - 1; ++i) {
      U.push_back(build_u(ps, fw, i));
      G.push_back(build_g(ps, fw, i));
    }
    auto scale = [&](const SparseD& a) { return std::max(1.0, a.max_abs()); };
    for (int i = 0; i < L - 1; ++i) {
      // U^2 = beta U
      SparseD sq = U[i].mul(U[i]);
      double r = 0.0;
      for (int row = 0; row < sq.n; ++row)
        for (const auto& [c, v] : sq.rows[row])
          r = std::max(r, std::abs(v - beta * U[i].get(row, c)));
      for (int row = 0; row < sq.n; ++row)
        for (const auto& [c, v] : U[i].rows[row])
          r = std::max(r, std::abs(sq.get(row, c) - beta * v));
      note(r / scale(U[i]), i + 1, a0, aL, "quadratic");
      // far commutation
      for (int j = i + 2; j < L - 1; ++j) {
        SparseD ab = U[i].mul(U[j]), ba = U[j].mul(U[i]);
        double rc = 0.0;
        for (int row = 0; row < ab.n; ++row)
          for (const auto& [c, v] : ab.rows[row])
            rc = std::max(rc, std::abs(v - ba.get(row, c)));
        for (int row = 0; row < ba.n; ++row)
          for (const auto& [c, v] : ba.rows[row])
            rc = std::max(rc, std::abs(ab.get(row, c) - v));
        note(rc / scale(U[i]), i + 1, a0, aL, "commutation");
      }
      // cubic relation and braid relation
      if (i + 1 < L - 1) {
        const SparseD &A = U[i], &B = U[i + 1];
        SparseD aba = A.mul(B).mul(A), bab = B.mul(A).mul(B);
        double rc = 0.0;
        for (int row = 0; row < aba.n; ++row)
          for (int col = 0; col < aba.n; ++col) {
            double lhs = aba.get(row, col) - A.get(row, col);
            double rhs = bab.get(row, col) - B.get(row, col);
            rc = std::max(rc, std::abs(lhs - rhs));
          }
        note(rc / scale(A), i + 1, a0, aL, "cubic");
        SparseC gab = G[i].mul(G[i + 1]).mul(G[i]);
        SparseC gba = G[i + 1].mul(G[i]).mul(G[i + 1]);
        double rb = 0.0;
        for (int row = 0; row < gab.n; ++row)
          for (const auto& [c, v] : gab.rows[row])
            rb = std::max(rb, std::abs(v - gba.get(row, c)));
        for (int row = 0; row < gba.n; ++row)
          for (const auto& [c, v] : gba.rows[row])
            rb = std::max(rb, std::abs(gab.get(row, c) - v));
        note(rb / scale(A), i + 1, a0, aL, "braid");
      }
    }
  }
  return rep;
}

RelationReport check_quotient(const GraphRep& g, int L, double tol) {
  const int k = g.rl.k;
  if (L < k + 1) throw std::invalid_argument("check_quotient: need L >= k+1");
  FaceWeights fw(g);
  auto q = g.rl.q();
  RelationReport rep;
  for (auto [a0, aL] : endpoint_sample(g, L)) {
    PathSpace ps = build_path_space(g, a0, aL, L);
    if (ps.dim() == 0) continue;
    std::vector<SparseC> gi;
    for (int i = 1; i <= k; ++i) gi.push_back(build_g(ps, fw, i));
    CMat sum = CMat::Zero(ps.dim(), ps.dim());
    std::vector<int> perm(k + 1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> word = reduced_word(perm);
      SparseC prod = SparseC::identity(ps.dim());
      for (int w : word) prod = prod.mul(gi[w - 1]);
      std::complex<double> coeff = 1.0;
      const std::complex<double> inv = -1.0 / q;  // 1/(-q), |q| = 1
      for (std::size_t t = 0; t < word.size(); ++t) coeff *= inv;
      for (int r = 0; r < prod.n; ++r)
        for (const auto& [c, v] : prod.rows[r]) sum(r, c) += coeff * v;
    } while (std::next_permutation(perm.begin(), perm.end()));
    double resid = sum.cwiseAbs().maxCoeff();
    if (resid > rep.max_residual) rep.max_residual = resid;
    if (resid > tol && rep.pass) {
      rep.pass = false;
      rep.detail = "quotient endpoints=(" + std::to_string(a0) + "," +
                   std::to_string(aL) + ")";
    }
  }
  return rep;
}

}  // namespace hk
