#include "heckepaths/traces.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hk {

EdgeIndex::EdgeIndex(const GraphRep& g) {
  const int m = g.size();
  out.resize(m);
  in.resize(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (g.G[1](a, b)) {
        int id = count();
        edges.push_back({a, b});
        out[a].push_back(id);
        in[b].push_back(id);
      }
}

namespace {

// successor lists of the edge transfer matrix: edge (a,b) feeds (b,c) with
// weight D(a,b,c) for Z, q - D(a,b,c) for Ztilde
template <class T>
std::vector<std::vector<std::pair<int, T>>> transfer(const EdgeIndex& ei,
                                                     const FaceWeights& fw,
                                                     bool tilde) {
  const auto q = fw.graph().rl.q();
  std::vector<std::vector<std::pair<int, T>>> succ(ei.count());
  for (int e = 0; e < ei.count(); ++e) {
    auto [a, b] = ei.edges[e];
    for (int f : ei.out[b]) {
      int c = ei.edges[f].second;
      double d = fw.diag(a, b, c);
      if constexpr (std::is_same_v<T, double>) {
        if (d != 0.0) succ[e].push_back({f, d});
      } else {
        succ[e].push_back({f, q - d});
      }
    }
  }
  return succ;
}

// one transfer application to every row of the dense edge-by-edge state S
template <class T>
void transfer_step(const std::vector<std::vector<std::pair<int, T>>>& succ,
                   std::vector<std::vector<T>>& s, bool parallel) {
  const int ne = static_cast<int>(s.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int e = 0; e < ne; ++e) {
    std::vector<T> next(ne, T(0));
    for (int f = 0; f < ne; ++f) {
      T v = s[e][f];
      if (v == T(0)) continue;
      for (const auto& [fp, w] : succ[f]) next[fp] += v * w;
    }
    s[e] = std::move(next);
  }
  (void)parallel;
}

// sum the state over first edges out of a0 and last edges into aL
template <class T, class M>
M collapse(const EdgeIndex& ei, const std::vector<std::vector<T>>& s, int m) {
  M z = M::Zero(m, m);
  for (int e = 0; e < ei.count(); ++e) {
    int a0 = ei.edges[e].first;
    for (int f = 0; f < ei.count(); ++f) {
      if (s[e][f] == T(0)) continue;
      z(a0, ei.edges[f].second) += s[e][f];
    }
  }
  return z;
}

template <class T, class M>
M trace_contraction(const GraphRep& g, int L, bool tilde, bool parallel) {
  if (L < 1) throw std::invalid_argument("trace: L must be >= 1");
  if (L == 1) {
    if constexpr (std::is_same_v<M, Mat>)
      return g.G[1].cast<double>();
    else
      return g.G[1].cast<std::complex<double>>();
  }
  FaceWeights fw(g);
  EdgeIndex ei(g);
  auto succ = transfer<T>(ei, fw, tilde);
  std::vector<std::vector<T>> s(ei.count(), std::vector<T>(ei.count(), T(0)));
  for (int e = 0; e < ei.count(); ++e) s[e][e] = T(1);
  for (int step = 0; step < L - 1; ++step) transfer_step(succ, s, parallel);
  return collapse<T, M>(ei, s, g.size());
}

}  // namespace

Mat z_trace(const GraphRep& g, int L, bool parallel) {
  return trace_contraction<double, Mat>(g, L, false, parallel);
}

CMat ztilde_trace(const GraphRep& g, int L, bool parallel) {
  return trace_contraction<std::complex<double>, CMat>(g, L, true, parallel);
}

Mat z_trace_serial(const GraphRep& g, int L) { return z_trace(g, L, false); }

CMat ztilde_trace_serial(const GraphRep& g, int L) { return ztilde_trace(g, L, false); }

TraceFamily build_traces(const GraphRep& g, int Lmax, bool parallel) {
  if (Lmax < 1) throw std::invalid_argument("build_traces: Lmax must be >= 1");
  TraceFamily fam;
  fam.g = &g;
  fam.Z.resize(Lmax + 1);
  fam.Zt.resize(Lmax + 1);
  fam.Z[1] = g.G[1].cast<double>();
  fam.Zt[1] = g.G[1].cast<std::complex<double>>();
  if (Lmax == 1) return fam;
  FaceWeights fw(g);
  EdgeIndex ei(g);
  auto succ_z = transfer<double>(ei, fw, false);
  auto succ_t = transfer<std::complex<double>>(ei, fw, true);
  std::vector<std::vector<double>> sz(ei.count(), std::vector<double>(ei.count(), 0.0));
  std::vector<std::vector<std::complex<double>>> st(
      ei.count(), std::vector<std::complex<double>>(ei.count(), 0.0));
  for (int e = 0; e < ei.count(); ++e) sz[e][e] = 1.0, st[e][e] = 1.0;
  for (int L = 2; L <= Lmax; ++L) {
    transfer_step(succ_z, sz, parallel);
    transfer_step(succ_t, st, parallel);
    fam.Z[L] = collapse<double, Mat>(ei, sz, g.size());
    fam.Zt[L] = collapse<std::complex<double>, CMat>(ei, st, g.size());
  }
  return fam;
}

namespace {

std::complex<double> product_trace(const PathSpace& ps, const FaceWeights& fw,
                                   const std::vector<int>& word, bool tilde) {
  if (word.empty()) return static_cast<double>(ps.dim());
  auto half_product = [&](std::size_t lo, std::size_t hi) {
    SparseC p = SparseC::identity(ps.dim());
    for (std::size_t t = lo; t < hi; ++t) {
      SparseC factor = tilde ? build_g(ps, fw, word[t])
                             : to_complex(build_u(ps, fw, word[t]));
      p = p.mul(factor);
    }
    return p;
  };
  std::size_t mid = word.size() / 2;
  return pair_trace(half_product(0, mid), half_product(mid, word.size()));
}

}  // namespace

OracleTrace trace_oracle(const GraphRep& g, int L, bool tilde, int max_dim,
                         std::size_t cap) {
  const int m = g.size();
  OracleTrace res;
  res.value = CMat::Zero(m, m);
  res.computed.assign(m, std::vector<bool>(m, false));
  FaceWeights fw(g);
  std::vector<int> word(L >= 1 ? L - 1 : 0);
  for (int i = 1; i <= L - 1; ++i) word[i - 1] = i;
  for (int a0 = 0; a0 < m; ++a0) {
    auto spaces = build_path_spaces_from(g, a0, L, cap);
    for (int aL = 0; aL < m; ++aL) {
      const PathSpace& ps = spaces[aL];
      if (ps.dim() == 0) {
        res.computed[a0][aL] = true;
        continue;
      }
      if (ps.dim() > max_dim) continue;
      res.value(a0, aL) = product_trace(ps, fw, word, tilde);
      res.computed[a0][aL] = true;
    }
  }
  return res;
}

CMat word_trace(const GraphRep& g, int L, const std::vector<int>& word, bool tilde,
                std::size_t cap) {
  for (int i : word)
    if (i < 1 || i > L - 1) throw std::out_of_range("word_trace: index out of range");
  const int m = g.size();
  CMat z = CMat::Zero(m, m);
  FaceWeights fw(g);
  for (int a0 = 0; a0 < m; ++a0) {
    auto spaces = build_path_spaces_from(g, a0, L, cap);
    for (int aL = 0; aL < m; ++aL)
      if (spaces[aL].dim() > 0) z(a0, aL) = product_trace(spaces[aL], fw, word, tilde);
  }
  return z;
}

double partial_trace_edge(const GraphRep& g, int L, int a0, int a1, int aL) {
  if (!g.G[1](a0, a1)) throw std::invalid_argument("partial_trace_edge: (a0,a1) not an edge");
  if (L < 1) throw std::invalid_argument("partial_trace_edge: L must be >= 1");
  if (L == 1) return a1 == aL ? 1.0 : 0.0;
  FaceWeights fw(g);
  EdgeIndex ei(g);
  auto succ = transfer<double>(ei, fw, false);
  std::vector<double> v(ei.count(), 0.0);
  for (int e : ei.out[a0])
    if (ei.edges[e].second == a1) v[e] = 1.0;
  for (int step = 0; step < L - 1; ++step) {
    std::vector<double> next(ei.count(), 0.0);
    for (int e = 0; e < ei.count(); ++e) {
      if (v[e] == 0.0) continue;
      for (const auto& [f, w] : succ[e]) next[f] += v[e] * w;
    }
    v = std::move(next);
  }
  double total = 0.0;
  for (int f : ei.in[aL]) total += v[f];
  return total;
}

double markov_average(const GraphRep& g, const Mat& m) {
  return g.psi.dot(m * g.psi);
}

std::complex<double> markov_average(const GraphRep& g, const CMat& m) {
  Eigen::VectorXcd psi = g.psi.cast<std::complex<double>>();
  return psi.dot(m * psi);  // psi is real, conjugation is trivial
}

}  // namespace hk
