#include "heckepaths/fusion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "heckepaths/chebyshev.hpp"

namespace hk {

namespace {

// Shared cache of products G_{m_1}...G_{m_r} keyed by the sorted index
// multiset; indices are all in 1..k-1 (G_0, G_k drop out as identities).
struct ProductCache {
  const GraphRep* g;
  std::map<std::vector<int>, IMat> cache;

  const IMat& get(const std::vector<int>& sorted) {
    auto it = cache.find(sorted);
    if (it != cache.end()) return it->second;
    IMat val;
    if (sorted.empty()) {
      val = IMat::Identity(g->size(), g->size());
    } else {
      std::vector<int> rest(sorted.begin(), sorted.end() - 1);
      val = get(rest) * g->G[sorted.back()];
    }
    return cache.emplace(sorted, std::move(val)).first->second;
  }
};

// det(G_{c_i - i + j})_{1<=i,j<=r} expanded over permutations, with terms
// collected by index multiset before any matrix work.
IMat jacobi_trudi(const GraphRep& g, const Partition& conj, ProductCache& pc) {
  const int k = g.rl.k;
  const int r = static_cast<int>(conj.size());
  if (r == 0) return IMat::Identity(g.size(), g.size());
  std::map<std::vector<int>, long long> terms;
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> idx(r);
    bool zero = false;
    for (int i = 0; i < r && !zero; ++i) {
      int m = conj[i] - (i + 1) + (perm[i] + 1);
      if (m < 0 || m > k) zero = true;
      idx[i] = m;
    }
    if (zero) continue;
    int inv = 0;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        if (perm[i] > perm[j]) ++inv;
    // G_0 and G_k are identities; drop them from the key
    std::vector<int> key;
    for (int m : idx)
      if (m != 0 && m != k) key.push_back(m);
    std::sort(key.begin(), key.end());
    terms[key] += (inv % 2 == 0) ? 1 : -1;
  } while (std::next_permutation(perm.begin(), perm.end()));

  IMat out = IMat::Zero(g.size(), g.size());
  for (const auto& [key, coeff] : terms) {
    if (coeff == 0) continue;
    out += coeff * pc.get(key);
  }
  return out;
}

IMat admissible_jt(const GraphRep& g, const Partition& conj, ProductCache& pc) {
  IMat out = jacobi_trudi(g, conj, pc);
  if ((out.array() < 0).any())
    throw std::runtime_error("fusion_matrix: negative entry in Jacobi-Trudi determinant");
  return out;
}

}  // namespace

IMat fusion_matrix(const GraphRep& g, const Weight& lambda) {
  if (!g.basic()) throw std::invalid_argument("fusion_matrix: basic graph required");
  if (!admissible(g.rl, lambda))
    throw std::invalid_argument("fusion_matrix: weight not admissible");
  ProductCache pc{&g, {}};
  Partition p = weight_to_partition(g.rl, lambda);
  return admissible_jt(g, conjugate_partition(p), pc);
}

IMat schur_matrix(const GraphRep& g, const Partition& p) {
  if (!g.basic()) throw std::invalid_argument("schur_matrix: basic graph required");
  auto reduced = reduce_partition(g.rl.k, p);
  if (!reduced) return IMat::Zero(g.size(), g.size());
  ProductCache pc{&g, {}};
  return jacobi_trudi(g, conjugate_partition(*reduced), pc);
}

IMat ade_fusion_matrix(const GraphRep& g, int lambda) {
  if (g.basic()) throw std::invalid_argument("ade_fusion_matrix: ADE graph required");
  if (lambda < 1 || lambda > g.rl.n - 1)
    throw std::invalid_argument("ade_fusion_matrix: label out of range");
  // V_lambda = P_{lambda-1}(G_1), integer matrix recurrence
  const int m = g.size();
  IMat pm = IMat::Zero(m, m), p = IMat::Identity(m, m);
  for (int i = 0; i < lambda - 1; ++i) {
    IMat next = g.G[1] * p - pm;
    pm = p;
    p = next;
  }
  return p;
}

FusionBasis build_fusion_basis(const GraphRep& g) {
  if (!g.basic()) throw std::invalid_argument("build_fusion_basis: basic graph required");
  ProductCache pc{&g, {}};
  FusionBasis b;
  b.N.reserve(g.size());
  for (const Weight& w : g.vertices) {
    Partition p = weight_to_partition(g.rl, w);
    b.N.push_back(admissible_jt(g, conjugate_partition(p), pc));
  }
  return b;
}

std::vector<IMat> ade_v_family(const GraphRep& g) {
  const int m = g.size();
  std::vector<IMat> fam;
  IMat pm = IMat::Zero(m, m), p = IMat::Identity(m, m);
  for (int lambda = 1; lambda <= g.rl.n - 1; ++lambda) {
    fam.push_back(p);
    IMat next = g.G[1] * p - pm;
    pm = p;
    p = next;
  }
  return fam;
}

namespace {

void fail(FusionRingReport& rep, const std::string& what) {
  if (rep.ok) {
    rep.ok = false;
    rep.detail = what;
  }
}

bool closure_of_product(const GraphRep& g, const FusionBasis& basis, const IMat& prod,
                        int coeff_row, FusionRingReport& rep, const std::string& tag) {
  // coefficients recovered from the 1-row of the product
  const int one = g.unit_vertex();
  IMat rec = IMat::Zero(g.size(), g.size());
  for (int nu = 0; nu < g.size(); ++nu) {
    long long c = prod(one, nu);
    if (c < 0) {
      fail(rep, tag + ": negative closure coefficient");
      return false;
    }
    if (c != 0) rec += c * basis.N[nu];
  }
  (void)coeff_row;
  if (rec != prod) {
    fail(rep, tag + ": product not reproduced by its 1-row coefficients");
    return false;
  }
  return true;
}

}  // namespace

FusionRingReport check_fusion_ring(const GraphRep& g, const FusionBasis& basis) {
  FusionRingReport rep;
  const int m = g.size();
  const int one = g.unit_vertex();
  // (a) entries nonnegative integers (integral by construction)
  for (int l = 0; l < m && rep.ok; ++l) {
    if ((basis.N[l].array() < 0).any())
      fail(rep, "lambda=" + g.labels[l] + ": negative entry");
    // basic graphs: row 1 of N_lambda is the indicator of lambda
    for (int mu = 0; mu < m; ++mu) {
      if (basis.N[l](one, mu) != (mu == l ? 1 : 0)) {
        fail(rep, "lambda=" + g.labels[l] + ": 1-row is not the indicator");
        break;
      }
    }
  }
  // (b) pairwise commutativity
  for (int a = 0; a < m && rep.ok; ++a)
    for (int b = a + 1; b < m && rep.ok; ++b)
      if (basis.N[a] * basis.N[b] != basis.N[b] * basis.N[a])
        fail(rep, "noncommuting pair " + g.labels[a] + ", " + g.labels[b]);
  // (c) Pieri consistency: G_1 N_lambda = sum_nu (G_1)_{lambda nu} N_nu
  for (int l = 0; l < m && rep.ok; ++l) {
    IMat lhs = g.G[1] * basis.N[l];
    IMat rhs = IMat::Zero(m, m);
    for (int nu = 0; nu < m; ++nu)
      if (g.G[1](l, nu) != 0) rhs += g.G[1](l, nu) * basis.N[nu];
    if (lhs != rhs) fail(rep, "Pieri failure at lambda=" + g.labels[l]);
  }
  // (d) closure
  if (rep.ok) {
    if (m <= 40) {
      rep.exhaustive_closure = true;
      for (int a = 0; a < m && rep.ok; ++a)
        for (int b = 0; b < m && rep.ok; ++b)
          closure_of_product(g, basis, basis.N[a] * basis.N[b], a, rep,
                             "closure " + g.labels[a] + " x " + g.labels[b]);
    } else {
      // generator closure; the full table follows since every N is a
      // polynomial in the G's
      for (int l = 1; l < g.rl.k && rep.ok; ++l)
        for (int b = 0; b < m && rep.ok; ++b)
          closure_of_product(g, basis, g.G[l] * basis.N[b], b, rep,
                             "closure G_" + std::to_string(l) + " x " + g.labels[b]);
    }
  }
  return rep;
}

Expansion n_expand(const GraphRep& g, const FusionBasis& basis, const CMat& M) {
  if (M.rows() != g.size() || M.cols() != g.size())
    throw std::invalid_argument("n_expand: dimension mismatch");
  Expansion e;
  const int one = g.unit_vertex();
  e.z = M.row(one).transpose();
  CMat rec = CMat::Zero(g.size(), g.size());
  for (int l = 0; l < g.size(); ++l)
    if (std::abs(e.z(l)) > 0) rec += e.z(l) * basis.N[l].cast<std::complex<double>>();
  e.residual = (M - rec).cwiseAbs().maxCoeff();
  return e;
}

CMat fusion_combination(const std::vector<IMat>& family, const Eigen::VectorXcd& z) {
  if (family.empty()) throw std::invalid_argument("fusion_combination: empty family");
  CMat out = CMat::Zero(family[0].rows(), family[0].cols());
  for (int l = 0; l < static_cast<int>(family.size()) && l < z.size(); ++l)
    out += z(l) * family[l].cast<std::complex<double>>();
  return out;
}

}  // namespace hk
