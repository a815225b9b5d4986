#pragma once

#include <string>
#include <vector>

#include "heckepaths/graphs.hpp"

namespace hk {

/// Fusion matrix N_lambda of a basic graph (dual Jacobi-Trudi determinant in
/// the commuting family G_0..G_k), or V_lambda = P_{lambda-1}(G_1) on an ADE
/// graph where lambda is a single Dynkin label 1..n-1.
IMat fusion_matrix(const GraphRep& g, const Weight& lambda);
IMat ade_fusion_matrix(const GraphRep& g, int lambda);

/// Jacobi-Trudi determinant for an arbitrary partition, after deleting
/// height-k columns (zero when more than k rows survive). Entries may be
/// negative outside the admissible range; no positivity is enforced.
IMat schur_matrix(const GraphRep& g, const Partition& p);

/// All N_lambda of a basic graph, indexed like g.vertices; products of the
/// G's are cached across the family.
struct FusionBasis {
  std::vector<IMat> N;
};
FusionBasis build_fusion_basis(const GraphRep& g);

/// V_1..V_{n-1} on an ADE graph (V_1 = I at index 0 corresponds to lambda=1).
std::vector<IMat> ade_v_family(const GraphRep& g);

struct FusionRingReport {
  bool ok = true;
  double max_residual = 0.0;
  std::string detail;  // first failure, "lambda=.. mu=.. entry=(r,c)"
  bool exhaustive_closure = false;
};

/// (a) nonnegative integer entries, (b) pairwise commutativity,
/// (c) Pieri consistency against G_1, (d) closure of products in the family.
/// Closure is checked pair-exhaustively when the vertex count is small and
/// through the generators otherwise (which generates the full table since the
/// family is polynomial in the G's); all comparisons are exact integer ones.
FusionRingReport check_fusion_ring(const GraphRep& g, const FusionBasis& basis);

struct Expansion {
  Eigen::VectorXcd z;    // coefficient per vertex/weight
  double residual = 0.0;  // max-norm of M - sum z N
};

/// Expand a matrix commuting with the N-family: z^(lambda) = M[1, lambda].
Expansion n_expand(const GraphRep& g, const FusionBasis& basis, const CMat& M);

/// sum_lambda z_lambda * family[lambda]
CMat fusion_combination(const std::vector<IMat>& family, const Eigen::VectorXcd& z);

}  // namespace hk
