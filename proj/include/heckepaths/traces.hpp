#pragma once

#include <complex>
#include <vector>

#include "heckepaths/graphs.hpp"
#include "heckepaths/hecke.hpp"

namespace hk {

/// Directed edge list of G_1 with per-vertex incidence, the state space of
/// the trace contraction.
struct EdgeIndex {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> out;  // edge ids leaving each vertex
  std::vector<std::vector<int>> in;   // edge ids entering each vertex

  explicit EdgeIndex(const GraphRep& g);
  int count() const { return static_cast<int>(edges.size()); }
};

/// Z_L and Ztilde_L for L = 1..Lmax; index 0 is unused.
struct TraceFamily {
  const GraphRep* g = nullptr;
  std::vector<Mat> Z;
  std::vector<CMat> Zt;
  int Lmax() const { return static_cast<int>(Z.size()) - 1; }
};

/// Edge-state contraction, O(E^2 L). `parallel` switches between the OpenMP
/// kernel and the serial reference; both are bit-deterministic.
Mat z_trace(const GraphRep& g, int L, bool parallel = true);
CMat ztilde_trace(const GraphRep& g, int L, bool parallel = true);
Mat z_trace_serial(const GraphRep& g, int L);
CMat ztilde_trace_serial(const GraphRep& g, int L);

/// All of Z_1..Z_Lmax, Ztilde_1..Ztilde_Lmax with one shared transfer sweep.
TraceFamily build_traces(const GraphRep& g, int Lmax, bool parallel = true);

/// Brute-force trace of the explicit operator product on the enumerated path
/// space, endpoint pair by endpoint pair. Pairs whose dimension exceeds
/// max_dim are skipped and flagged in `computed`.
struct OracleTrace {
  CMat value;
  std::vector<std::vector<bool>> computed;
};
OracleTrace trace_oracle(const GraphRep& g, int L, bool tilde, int max_dim = 10000,
                         std::size_t cap = kDefaultPathCap);

/// tr of an arbitrary generator word (indices in 1..L-1, possibly repeated);
/// U-words give a real matrix returned with zero imaginary part.
CMat word_trace(const GraphRep& g, int L, const std::vector<int>& word, bool tilde,
                std::size_t cap = kDefaultPathCap);

/// Walk sum with a_0, a_1 and a_L all fixed; summing over the neighbours a_1
/// of a_0 reproduces (Z_L)_{a0,aL}.
double partial_trace_edge(const GraphRep& g, int L, int a0, int a1, int aL);

/// psi^T M psi with the unit-norm Perron vector.
double markov_average(const GraphRep& g, const Mat& m);
std::complex<double> markov_average(const GraphRep& g, const CMat& m);

}  // namespace hk
