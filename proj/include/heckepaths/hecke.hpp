#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "heckepaths/graphs.hpp"

namespace hk {

/// Boltzmann (diamond) face weights of a graph, with precomputed step tables.
/// Basic graphs use the s-ratio weights; ADE graphs the Perron-vector ones.
/// Signs are fixed by always taking the nonnegative square root with the
/// direction pair in ascending order (traces are gauge invariant).
class FaceWeights {
 public:
  explicit FaceWeights(const GraphRep& g);

  const GraphRep& graph() const { return *g_; }

  /// Weight of the diamond a->b->c / a->b'->c; all four adjacencies required.
  double diamond(int a, int b, int bp, int c) const;

  /// Diagonal diamond D(a,b,c) = diamond(a,b,b,c); zero when the two step
  /// directions coincide.
  double diag(int a, int b, int c) const;

  /// Direction alpha with b = a + e_alpha, or 0 if (a,b) is not an edge.
  int direction(int a, int b) const;

 private:
  const GraphRep* g_;
  std::vector<std::vector<int>> dir_;    // dir_[a][b] in 1..k, 0 if non-edge
  std::vector<double> sins_;             // sin(pi*m/n), m = 0..2n
  double sin_pair(int a_idx, int u, int v) const;
};

struct PathSpace {
  const GraphRep* g = nullptr;
  int L = 0, a0 = 0, aL = 0;
  std::vector<std::vector<int>> basis;  // vertex sequences of length L+1
  std::unordered_map<std::string, int> idx;

  int dim() const { return static_cast<int>(basis.size()); }
  int find(const std::vector<int>& path) const;
};

struct CapExceeded : std::runtime_error {
  std::size_t dimension;
  CapExceeded(std::size_t d, std::size_t cap)
      : std::runtime_error("path space dimension " + std::to_string(d) +
                           " exceeds cap " + std::to_string(cap)),
        dimension(d) {}
};

constexpr std::size_t kDefaultPathCap = 2'000'000;

/// Deterministic DFS enumeration in vertex order.
PathSpace build_path_space(const GraphRep& g, int a0, int aL, int L,
                           std::size_t cap = kDefaultPathCap);

/// All path spaces from a0 of length L, grouped by endpoint (single DFS).
std::vector<PathSpace> build_path_spaces_from(const GraphRep& g, int a0, int L,
                                              std::size_t cap = kDefaultPathCap);

/// Sorted-row sparse matrix; rows hold (col, value) pairs in column order.
template <class T>
struct Sparse {
  int n = 0;
  std::vector<std::vector<std::pair<int, T>>> rows;

  static Sparse identity(int n);
  Sparse<T> mul(const Sparse<T>& o) const;
  T get(int r, int c) const;
  double max_abs() const;
};

using SparseD = Sparse<double>;
using SparseC = Sparse<std::complex<double>>;

SparseC to_complex(const SparseD& a);

/// tr(a b) without forming the product.
std::complex<double> pair_trace(const SparseC& a, const SparseC& b);
SparseC axpy(const std::complex<double>& alpha, const SparseC& a,
             const std::complex<double>& beta, const SparseC& b);

/// U_i on a path space (i in 1..L-1).
SparseD build_u(const PathSpace& ps, const FaceWeights& fw, int i);
/// g_i = q - U_i.
SparseC build_g(const PathSpace& ps, const FaceWeights& fw, int i);

/// One reduced word for a permutation (bubble-sort word, 1-based generators).
std::vector<int> reduced_word(std::vector<int> perm);

struct RelationReport {
  double max_residual = 0.0;
  bool pass = true;
  std::string detail;  // offending (i, endpoints) on breach
};

/// Quadratic, commutation and cubic relations for U, braid relations for g,
/// over a deterministic sample of endpoint pairs.
RelationReport check_hecke_relations(const GraphRep& g, int L, double tol = 1e-9);

/// Antisymmetrizer sum over S_{k+1} with one reduced word per permutation.
RelationReport check_quotient(const GraphRep& g, int L, double tol = 1e-9);

/// Deterministic sample of endpoint pairs (all pairs for small graphs).
std::vector<std::pair<int, int>> endpoint_sample(const GraphRep& g, int L,
                                                 int max_pairs = 12);

}  // namespace hk
