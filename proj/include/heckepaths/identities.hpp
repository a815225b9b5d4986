#pragma once

#include <string>
#include <vector>

#include "heckepaths/fusion.hpp"
#include "heckepaths/graphs.hpp"
#include "heckepaths/traces.hpp"

namespace hk {

struct IdentityReport {
  std::string id;
  std::string params;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = true;
  double seconds = 0.0;
  std::string detail;  // offending entry coordinates on failure
};

using ReportList = std::vector<IdentityReport>;

/// Generator relations (quadratic, commutation, cubic, braid) on sampled
/// path spaces; quotient relation included for k <= 3 when L >= k+1.
ReportList verify_relations(const GraphRep& g, int Lmax, double tol = 1e-9);

/// Contraction traces against the brute-force operator oracle.
ReportList verify_oracle(const GraphRep& g, int Lmax, double tol = 1e-9,
                         int max_dim = 10000, std::size_t cap = kDefaultPathCap);

/// Recursions in L for Ztilde and Z.
ReportList verify_recursion_tilde(const GraphRep& g, const TraceFamily& fam,
                                  double tol = 1e-8);
ReportList verify_recursion_z(const GraphRep& g, const TraceFamily& fam,
                              double tol = 1e-8);

/// Z and Ztilde regenerated from the recursions alone match the traced ones.
ReportList verify_cross_consistency(const GraphRep& g, const TraceFamily& fam,
                                    double tol = 1e-8);

/// Tabulated expansions of Z_1..Z_5 and Ztilde_1..Ztilde_4 in the G's.
ReportList verify_polynomial_tables(const GraphRep& g, const TraceFamily& fam,
                                    double tol = 1e-8);

/// Fusion-basis rows of Z_1..Z_5 and hook rows of Ztilde_1..Ztilde_5,
/// cross-checked through n_expand.
ReportList verify_n_tables(const GraphRep& g, const TraceFamily& fam,
                           double tol = 1e-8);

/// Hook expansion of Ztilde_L for 1 <= L <= Lmax.
ReportList verify_hook_expansion(const GraphRep& g, const TraceFamily& fam,
                                 double tol = 1e-8);

/// Closed forms: k=2 parity formula (any graph), k=3 binomial sums (basic).
ReportList verify_closed_forms(const GraphRep& g, const TraceFamily& fam,
                               double tol = 1e-8);

/// Perron-weighted diamond sum at every edge and the Markov average of Z_L.
ReportList verify_markov(const GraphRep& g, const TraceFamily& fam,
                         double tol = 1e-9);

/// k=2 universality: Z/Ztilde of an ADE graph decompose over V_lambda with
/// the coefficients read off the basic graph at the same Coxeter number.
ReportList verify_universality(const GraphRep& ade, int Lmax, double tol = 1e-8);

/// k=3 trigonometric identity at interior weights; near-wall weights are
/// skipped and counted in the detail string.
ReportList verify_trig_identity(const RankLevel& rl, double tol = 1e-9);

/// Antisymmetrizer chain: the S_{k+1} sum annihilates the path spaces, its
/// product with the remaining g's traces to zero, and the matching linear
/// combination of the Ztilde's vanishes.
ReportList verify_quotient_chain(const GraphRep& g, int L, double tol = 1e-8);

/// Partial-trace identity with one boundary edge fixed (k=3, L=4).
ReportList verify_partial_trace(const GraphRep& g, double tol = 1e-9);

/// Exact fusion-ring checks wrapped as a report.
ReportList verify_fusion_ring(const GraphRep& g);

/// JSON-lines and CSV renderings, one report per line/row.
std::string reports_to_jsonl(const ReportList& reports);
std::string reports_to_csv(const ReportList& reports);

}  // namespace hk
