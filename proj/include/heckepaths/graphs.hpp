#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "heckepaths/weights.hpp"

namespace hk {

using IMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;

/// A graph carrying a path representation: vertex list, fused adjacencies
/// G_0..G_k (with G_0 = G_k = I) and the Perron-Frobenius vector of G_1.
struct GraphRep {
  RankLevel rl;
  std::string kind;  // "basic" or an ADE name: A5, D4, E6, E7, E8
  std::vector<Weight> vertices;      // basic only
  std::vector<std::string> labels;   // printable vertex labels
  std::vector<IMat> G;               // G[0..k]
  Eigen::VectorXd psi;               // unit norm, strictly positive
  double psi_eig = 0.0;              // Perron eigenvalue of G_1

  bool basic() const { return kind == "basic"; }
  int size() const { return static_cast<int>(G[1].rows()); }
  int unit_vertex() const;                 // index of the weight (1,...,1); 0 for ADE
  int index_of(const Weight& w) const;     // -1 if absent (basic only)
  /// G_l with the convention G_l = 0 for l > k (returned as a zero matrix).
  IMat fused(int l) const;

  std::map<Weight, int> index;  // basic only
};

GraphRep basic_graph(const RankLevel& rl);

/// k=2 path representations on ADE Dynkin diagrams; name in
/// {A_m (m>=2), D_m (m>=4), E6, E7, E8}, written e.g. "A5", "D4".
GraphRep ade_graph(const std::string& name);

/// Right Perron vector of an irreducible nonnegative matrix, unit norm,
/// first component positive.  Returns {psi, eigenvalue}.
std::pair<Eigen::VectorXd, double> perron_vector(const IMat& g1);

/// JSON dump per the CLI schema (integer adjacencies, psi to 15 digits).
std::string graph_to_json(const GraphRep& g);

}  // namespace hk
