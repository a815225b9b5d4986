#include "heckepaths/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hk {

namespace {

std::string weight_label(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

double round15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

}  // namespace

int GraphRep::unit_vertex() const {
  if (!basic()) return 0;
  auto it = index.find(unit_weight(rl));
  return it == index.end() ? -1 : it->second;
}

int GraphRep::index_of(const Weight& w) const {
  auto it = index.find(w);
  return it == index.end() ? -1 : it->second;
}

IMat GraphRep::fused(int l) const {
  if (l < 0) throw std::out_of_range("fused: negative index");
  if (l > rl.k) return IMat::Zero(size(), size());
  return G[l];
}

std::pair<Eigen::VectorXd, double> perron_vector(const IMat& g1) {
  const int m = static_cast<int>(g1.rows());
  Mat a = g1.cast<double>();
  // shift by the identity: G_1 may be k-partite, the shift restores a
  // peripheral spectral gap while keeping the Perron vector
  Mat shifted = a + Mat::Identity(m, m);
  Eigen::VectorXd v = Eigen::VectorXd::Constant(m, 1.0 / std::sqrt(double(m)));
  double mu = 0.0;
  const int max_iter = 500000;
  int it = 0;
  for (; it < max_iter; ++it) {
    Eigen::VectorXd w = shifted * v;
    w.normalize();
    Eigen::VectorXd gv = a * w;
    mu = w.dot(gv);
    if ((gv - mu * w).lpNorm<Eigen::Infinity>() <= 1e-13 * std::max(1.0, mu)) {
      v = w;
      break;
    }
    v = w;
  }
  if (it == max_iter)
    throw std::runtime_error("perron_vector: power iteration did not converge");
  if (v(0) < 0) v = -v;
  if (v.minCoeff() <= 0)
    throw std::runtime_error("perron_vector: vector not strictly positive");
  return {v, mu};
}

GraphRep basic_graph(const RankLevel& rl) {
  GraphRep g;
  g.rl = rl;
  g.kind = "basic";
  g.vertices = enumerate_weights(rl);
  const int m = static_cast<int>(g.vertices.size());
  for (int i = 0; i < m; ++i) {
    g.index[g.vertices[i]] = i;
    g.labels.push_back(weight_label(g.vertices[i]));
  }
  g.G.assign(rl.k + 1, IMat::Zero(m, m));
  g.G[0] = IMat::Identity(m, m);
  g.G[rl.k] = IMat::Identity(m, m);
  // truncated Pieri rule: (G_l)_{ab} = 1 iff b = a + sum_{alpha in S} e_alpha
  // for an l-element subset S of {1..k}
  for (int l = 1; l < rl.k; ++l) {
    for (int a = 0; a < m; ++a) {
      // iterate l-subsets of {1..k} by DFS, shifting as we go
      auto dfs = [&](auto&& self, int start, int depth, const Weight& cur) -> void {
        if (depth == l) {
          int b = g.index_of(cur);
          if (b >= 0) g.G[l](a, b) = 1;
          return;
        }
        for (int alpha = start; alpha <= rl.k; ++alpha) {
          // intermediate weights need not be admissible; shift labels directly
          Weight next = cur;
          if (alpha <= rl.k - 1) next[alpha - 1] += 1;
          if (alpha >= 2) next[alpha - 2] -= 1;
          self(self, alpha + 1, depth + 1, next);
        }
      };
      dfs(dfs, 1, 0, g.vertices[a]);
    }
  }
  auto [psi, mu] = perron_vector(g.G[1]);
  g.psi = psi;
  g.psi_eig = mu;
  return g;
}

namespace {

// edges of an ADE Dynkin diagram plus its Coxeter number
struct AdeData {
  int vertices;
  int coxeter;
  std::vector<std::pair<int, int>> edges;  // 0-based
};

AdeData ade_data(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("ade_graph: unknown name " + name);
  char fam = name[0];
  int m = std::atoi(name.c_str() + 1);
  AdeData d;
  if (fam == 'A' && m >= 2) {
    d.vertices = m;
    d.coxeter = m + 1;
    for (int i = 0; i + 1 < m; ++i) d.edges.push_back({i, i + 1});
  } else if (fam == 'D' && m >= 4) {
    d.vertices = m;
    d.coxeter = 2 * m - 2;
    for (int i = 0; i + 1 < m - 1; ++i) d.edges.push_back({i, i + 1});
    d.edges.push_back({m - 3, m - 1});  // fork at the (m-2)-th node
  } else if (fam == 'E' && m >= 6 && m <= 8) {
    d.vertices = m;
    d.coxeter = (m == 6) ? 12 : (m == 7) ? 18 : 30;
    for (int i = 0; i + 1 < m - 1; ++i) d.edges.push_back({i, i + 1});
    d.edges.push_back({2, m - 1});  // extra node on the third vertex of the chain
  } else {
    throw std::invalid_argument("ade_graph: unknown name " + name);
  }
  return d;
}

}  // namespace

GraphRep ade_graph(const std::string& name) {
  AdeData d = ade_data(name);
  GraphRep g;
  g.rl = RankLevel(2, d.coxeter);
  g.kind = name;
  const int m = d.vertices;
  for (int i = 0; i < m; ++i) g.labels.push_back(std::to_string(i + 1));
  g.G.assign(3, IMat::Zero(m, m));
  g.G[0] = IMat::Identity(m, m);
  g.G[2] = IMat::Identity(m, m);
  for (auto [a, b] : d.edges) {
    g.G[1](a, b) = 1;
    g.G[1](b, a) = 1;
  }
  auto [psi, mu] = perron_vector(g.G[1]);
  double beta = g.rl.beta();
  if (std::abs(mu - beta) > 1e-10)
    throw std::runtime_error("ade_graph: Perron eigenvalue does not match 2cos(pi/n)");
  g.psi = psi;
  g.psi_eig = mu;
  return g;
}

std::string graph_to_json(const GraphRep& g) {
  nlohmann::json j;
  j["kind"] = g.kind;
  j["k"] = g.rl.k;
  j["n"] = g.rl.n;
  j["vertices"] = g.labels;
  nlohmann::json gs = nlohmann::json::array();
  for (int l = 0; l < static_cast<int>(g.G.size()); ++l) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < g.size(); ++r) {
      for (int c = 0; c < g.size(); ++c) rows.push_back(g.G[l](r, c));
    }
    gs.push_back(rows);
  }
  j["G"] = gs;
  nlohmann::json psi = nlohmann::json::array();
  for (int i = 0; i < g.size(); ++i) psi.push_back(round15(g.psi(i)));
  j["psi"] = psi;
  return j.dump();
}

}  // namespace hk
