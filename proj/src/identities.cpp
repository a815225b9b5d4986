#include "heckepaths/identities.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <map>

#include "heckepaths/chebyshev.hpp"
#include "heckepaths/hecke.hpp"

namespace hk {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string graph_params(const GraphRep& g) {
  return "graph=" + g.kind + ";k=" + std::to_string(g.rl.k) +
         ";n=" + std::to_string(g.rl.n);
}

template <class M>
double max_diff(const M& a, const M& b, std::string* where = nullptr) {
  double best = 0.0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) {
      double d = std::abs(a(r, c) - b(r, c));
      if (d > best) {
        best = d;
        if (where)
          *where = "entry=(" + std::to_string(r) + "," + std::to_string(c) + ")";
      }
    }
  return best;
}

IdentityReport close_report(std::string id, std::string params, double residual,
                            double tol, Clock::time_point start,
                            std::string detail = {}) {
  IdentityReport rep;
  rep.id = std::move(id);
  rep.params = std::move(params);
  rep.residual = residual;
  rep.tol = tol;
  rep.pass = residual <= tol;
  rep.seconds = elapsed(start);
  if (rep.pass) detail.clear();
  rep.detail = std::move(detail);
  return rep;
}

std::complex<double> qpow(std::complex<double> q, int e) {
  std::complex<double> base = e >= 0 ? q : 1.0 / q;
  std::complex<double> out = 1.0;
  for (int i = 0; i < std::abs(e); ++i) out *= base;
  return out;
}

Mat fd(const GraphRep& g, int l) { return g.fused(l).cast<double>(); }
CMat fc(const GraphRep& g, int l) { return g.fused(l).cast<std::complex<double>>(); }

long long binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  long long out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

}  // namespace

ReportList verify_relations(const GraphRep& g, int Lmax, double tol) {
  ReportList out;
  for (int L = 2; L <= Lmax; ++L) {
    auto start = Clock::now();
    RelationReport r = check_hecke_relations(g, L, tol);
    out.push_back(close_report("hecke-relations", graph_params(g) + ";L=" + std::to_string(L),
                               r.max_residual, tol, start, r.detail));
  }
  const int k = g.rl.k;
  if (k <= 3) {
    for (int L = k + 1; L <= std::min(Lmax, k + 2); ++L) {
      auto start = Clock::now();
      RelationReport r = check_quotient(g, L, tol);
      out.push_back(close_report("quotient", graph_params(g) + ";L=" + std::to_string(L),
                                 r.max_residual, tol, start, r.detail));
    }
  }
  return out;
}

ReportList verify_oracle(const GraphRep& g, int Lmax, double tol, int max_dim,
                         std::size_t cap) {
  ReportList out;
  for (int L = 1; L <= Lmax; ++L) {
    auto start = Clock::now();
    Mat z = z_trace(g, L);
    CMat zt = ztilde_trace(g, L);
    OracleTrace oz = trace_oracle(g, L, false, max_dim, cap);
    OracleTrace ot = trace_oracle(g, L, true, max_dim, cap);
    double resid = 0.0;
    int skipped = 0;
    std::string where;
    for (int r = 0; r < g.size(); ++r)
      for (int c = 0; c < g.size(); ++c) {
        if (!oz.computed[r][c]) {
          ++skipped;
          continue;
        }
        double dz = std::abs(std::complex<double>(z(r, c)) - oz.value(r, c));
        double dt = std::abs(zt(r, c) - ot.value(r, c));
        if (std::max(dz, dt) > resid) {
          resid = std::max(dz, dt);
          where = "entry=(" + std::to_string(r) + "," + std::to_string(c) + ")";
        }
      }
    std::string params = graph_params(g) + ";L=" + std::to_string(L);
    if (skipped) params += ";skipped=" + std::to_string(skipped);
    out.push_back(close_report("trace-oracle", params, resid, tol, start, where));
  }
  return out;
}

ReportList verify_recursion_tilde(const GraphRep& g, const TraceFamily& fam, double tol) {
  ReportList out;
  const int k = g.rl.k;
  const auto q = g.rl.q();
  const double beta = g.rl.beta();
  for (int L = 2; L <= fam.Lmax(); ++L) {
    auto start = Clock::now();
    CMat lhs = CMat::Zero(g.size(), g.size());
    for (int l = 0; l <= std::min(k, L - 1); ++l)
      lhs += qpow(-q, l) * (fam.Zt[L - l] * fc(g, l));
    double sign = (L - 1) % 2 == 0 ? 1.0 : -1.0;
    CMat rhs = sign * cheb_eval(L - 1, beta) * fc(g, L);
    std::string where;
    double resid = max_diff<CMat>(lhs, rhs, &where);
    out.push_back(close_report("recursion-tilde", graph_params(g) + ";L=" + std::to_string(L),
                               resid, tol, start, where));
  }
  return out;
}

ReportList verify_recursion_z(const GraphRep& g, const TraceFamily& fam, double tol) {
  ReportList out;
  const int k = g.rl.k;
  const double beta = g.rl.beta();
  for (int L = 2; L <= fam.Lmax(); ++L) {
    auto start = Clock::now();
    Mat lhs = Mat::Zero(g.size(), g.size());
    for (int l = 0; l <= std::min(k, L - 1); ++l)
      lhs += cheb_eval(l - 2, beta) * (fam.Z[L - l] * fd(g, l));
    Mat rhs = -cheb_eval(L - 1, beta) * fd(g, L);
    std::string where;
    double resid = max_diff<Mat>(lhs, rhs, &where);
    out.push_back(close_report("recursion-z", graph_params(g) + ";L=" + std::to_string(L),
                               resid, tol, start, where));
  }
  return out;
}

ReportList verify_cross_consistency(const GraphRep& g, const TraceFamily& fam, double tol) {
  ReportList out;
  const int k = g.rl.k;
  const double beta = g.rl.beta();
  const auto q = g.rl.q();
  auto start = Clock::now();
  // regenerate both families from the recursions, seeded by Z_1 = G_1 only
  std::vector<Mat> zr(fam.Lmax() + 1);
  std::vector<CMat> tr(fam.Lmax() + 1);
  zr[1] = fd(g, 1);
  tr[1] = fc(g, 1);
  for (int L = 2; L <= fam.Lmax(); ++L) {
    Mat z = Mat::Zero(g.size(), g.size());
    for (int l = 2; l <= std::min(k, L - 1); ++l)
      z += cheb_eval(l - 2, beta) * (zr[L - l] * fd(g, l));
    if (L <= k) z += cheb_eval(L - 1, beta) * fd(g, L);
    zr[L] = z;
    CMat t = CMat::Zero(g.size(), g.size());
    for (int l = 1; l <= std::min(k, L - 1); ++l)
      t -= qpow(-q, l) * (tr[L - l] * fc(g, l));
    if (L <= k) {
      double sign = (L - 1) % 2 == 0 ? 1.0 : -1.0;
      t += sign * cheb_eval(L - 1, beta) * fc(g, L);
    }
    tr[L] = t;
  }
  double resid = 0.0;
  std::string where;
  for (int L = 1; L <= fam.Lmax(); ++L) {
    std::string w;
    double dz = max_diff<Mat>(zr[L], fam.Z[L], &w);
    if (dz > resid) resid = dz, where = "Z L=" + std::to_string(L) + " " + w;
    double dt = max_diff<CMat>(tr[L], fam.Zt[L], &w);
    if (dt > resid) resid = dt, where = "Zt L=" + std::to_string(L) + " " + w;
  }
  out.push_back(close_report("recursion-cross", graph_params(g) + ";Lmax=" +
                             std::to_string(fam.Lmax()), resid, tol, start, where));
  return out;
}

ReportList verify_polynomial_tables(const GraphRep& g, const TraceFamily& fam, double tol) {
  ReportList out;
  const double b = g.rl.beta();
  const auto q = g.rl.q();
  Mat g1 = fd(g, 1), g2 = fd(g, 2), g3 = fd(g, 3), g4 = fd(g, 4), g5 = fd(g, 5);
  std::vector<Mat> zrows;
  zrows.push_back(g1);
  zrows.push_back(b * g2);
  zrows.push_back(g1 * g2 + (b * b - 1) * g3);
  zrows.push_back(b * (g2 * g2 + g1 * g3) + b * (b * b - 2) * g4);
  zrows.push_back(g1 * g2 * g2 + (2 * b * b - 1) * g2 * g3 + (b * b - 1) * g1 * g4 +
                  (b * b * b * b - 3 * b * b + 1) * g5);
  for (int L = 1; L <= std::min<int>(5, fam.Lmax()); ++L) {
    auto start = Clock::now();
    std::string where;
    double resid = max_diff<Mat>(fam.Z[L], zrows[L - 1], &where);
    out.push_back(close_report("table-z", graph_params(g) + ";L=" + std::to_string(L),
                               resid, tol, start, where));
  }
  CMat c1 = fc(g, 1), c2 = fc(g, 2), c3 = fc(g, 3), c4 = fc(g, 4);
  auto qp = [&](int e) { return qpow(q, e); };
  std::vector<CMat> trows;
  trows.push_back(c1);
  trows.push_back(qp(1) * c1 * c1 - (qp(1) + qp(-1)) * c2);
  trows.push_back(qp(2) * c1 * c1 * c1 - (2.0 * qp(2) + 1.0) * (c1 * c2) +
                  (qp(2) + 1.0 + qp(-2)) * c3);
  trows.push_back(qp(3) * c1 * c1 * c1 * c1 - (3.0 * qp(3) + qp(1)) * (c1 * c1 * c2) +
                  (qp(3) + qp(1)) * (c2 * c2) + (2.0 * qp(3) + qp(1) + qp(-1)) * (c1 * c3) -
                  (qp(3) + qp(1) + qp(-1) + qp(-3)) * c4);
  for (int L = 1; L <= std::min<int>(4, fam.Lmax()); ++L) {
    auto start = Clock::now();
    std::string where;
    double resid = max_diff<CMat>(fam.Zt[L], trows[L - 1], &where);
    out.push_back(close_report("table-ztilde", graph_params(g) + ";L=" + std::to_string(L),
                               resid, tol, start, where));
  }
  return out;
}

namespace {

// Z_L in the fusion basis: shape -> polynomial in beta, (power, coefficient)
using BetaPoly = std::vector<std::pair<int, long long>>;
std::vector<std::vector<std::pair<Partition, BetaPoly>>> z_fusion_rows() {
  return {
      {{{1}, {{0, 1}}}},
      {{{1, 1}, {{1, 1}}}},
      {{{1, 1, 1}, {{2, 1}}}, {{2, 1}, {{0, 1}}}},
      {{{1, 1, 1, 1}, {{3, 1}}}, {{2, 1, 1}, {{1, 2}}}, {{2, 2}, {{1, 1}}}},
      {{{1, 1, 1, 1, 1}, {{4, 1}}},
       {{2, 1, 1, 1}, {{2, 3}}},
       {{2, 2, 1}, {{2, 2}, {0, 1}}},
       {{3, 1, 1}, {{0, 1}}},
       {{3, 2}, {{0, 1}}}},
  };
}

double eval_beta_poly(const BetaPoly& p, double beta) {
  double v = 0.0;
  for (auto [pow, c] : p) v += c * std::pow(beta, pow);
  return v;
}

CMat hook_combination(const GraphRep& g, int L) {
  const auto q = g.rl.q();
  CMat e = CMat::Zero(g.size(), g.size());
  for (int s = 0; s <= L - 1; ++s) {
    int t = L - 1 - s;
    Partition hook(1 + s, 1);
    hook[0] = t + 1;
    double sign = s % 2 == 0 ? 1.0 : -1.0;
    e += sign * qpow(q, L - 1 - 2 * s) * schur_matrix(g, hook).cast<std::complex<double>>();
  }
  return e;
}

}  // namespace

ReportList verify_n_tables(const GraphRep& g, const TraceFamily& fam, double tol) {
  ReportList out;
  const double beta = g.rl.beta();
  FusionBasis basis = build_fusion_basis(g);
  auto rows = z_fusion_rows();
  const int one = g.unit_vertex();
  for (int L = 1; L <= std::min<int>(5, fam.Lmax()); ++L) {
    auto start = Clock::now();
    Mat expect = Mat::Zero(g.size(), g.size());
    for (const auto& [shape, poly] : rows[L - 1])
      expect += eval_beta_poly(poly, beta) * schur_matrix(g, shape).cast<double>();
    std::string where;
    double resid = max_diff<Mat>(fam.Z[L], expect, &where);
    Expansion e = n_expand(g, basis, fam.Z[L].cast<std::complex<double>>());
    resid = std::max(resid, e.residual);
    for (int nu = 0; nu < g.size(); ++nu) {
      double d = std::abs(e.z(nu) - std::complex<double>(expect(one, nu)));
      if (d > resid) resid = d, where = "coefficient nu=" + g.labels[nu];
    }
    out.push_back(close_report("n-table-z", graph_params(g) + ";L=" + std::to_string(L),
                               resid, tol, start, where));
  }
  for (int L = 1; L <= std::min<int>(5, fam.Lmax()); ++L) {
    auto start = Clock::now();
    CMat expect = hook_combination(g, L);
    std::string where;
    double resid = max_diff<CMat>(fam.Zt[L], expect, &where);
    Expansion e = n_expand(g, basis, fam.Zt[L]);
    resid = std::max(resid, e.residual);
    for (int nu = 0; nu < g.size(); ++nu) {
      double d = std::abs(e.z(nu) - expect(one, nu));
      if (d > resid) resid = d, where = "coefficient nu=" + g.labels[nu];
    }
    out.push_back(close_report("n-table-ztilde", graph_params(g) + ";L=" + std::to_string(L),
                               resid, tol, start, where));
  }
  return out;
}

ReportList verify_hook_expansion(const GraphRep& g, const TraceFamily& fam, double tol) {
  ReportList out;
  for (int L = 1; L <= fam.Lmax(); ++L) {
    auto start = Clock::now();
    std::string where;
    double resid = max_diff<CMat>(fam.Zt[L], hook_combination(g, L), &where);
    out.push_back(close_report("hook-ztilde", graph_params(g) + ";L=" + std::to_string(L),
                               resid, tol, start, where));
  }
  return out;
}

ReportList verify_closed_forms(const GraphRep& g, const TraceFamily& fam, double tol) {
  ReportList out;
  const int k = g.rl.k;
  const double b = g.rl.beta();
  if (k == 2) {
    Mat g1 = fd(g, 1), g2 = fd(g, 2);
    std::vector<Mat> g2p{Mat::Identity(g.size(), g.size())};
    for (int i = 1; 2 * i <= fam.Lmax(); ++i) g2p.push_back(g2p.back() * g2);
    for (int L = 1; L <= fam.Lmax(); ++L) {
      auto start = Clock::now();
      Mat expect = L % 2 ? Mat(g1 * g2p[(L - 1) / 2]) : Mat(b * g2p[L / 2]);
      std::string where;
      double resid = max_diff<Mat>(fam.Z[L], expect, &where);
      out.push_back(close_report("closed-form-k2", graph_params(g) + ";L=" + std::to_string(L),
                                 resid, tol, start, where));
    }
  } else if (k == 3) {
    Mat g1 = fd(g, 1), g2 = fd(g, 2), g3 = fd(g, 3);
    auto mpow = [&](const Mat& m, int e) {
      Mat out = Mat::Identity(g.size(), g.size());
      for (int i = 0; i < e; ++i) out = out * m;
      return out;
    };
    for (int L = 2; L <= fam.Lmax(); ++L) {
      auto start = Clock::now();
      Mat expect = Mat::Zero(g.size(), g.size());
      if (L % 2) {
        int l = (L - 1) / 2;
        for (int p = 0; 3 * p <= l; ++p)
          expect += static_cast<double>(binom(l - p, 2 * p)) * std::pow(b, 2 * p) *
                    (g1 * mpow(g2, l - 3 * p) * mpow(g3, 2 * p));
        for (int p = 0; 3 * p <= l - 1; ++p)
          expect += (binom(l - p, 2 * p + 1) * std::pow(b, 2 * p + 2) -
                     binom(l - p - 1, 2 * p) * std::pow(b, 2 * p)) *
                    (mpow(g2, l - 3 * p - 1) * mpow(g3, 2 * p + 1));
      } else {
        int l = L / 2;
        expect += b * mpow(g2, l);
        for (int p = 1; 3 * p <= l; ++p)
          expect += (binom(l - p, 2 * p) * std::pow(b, 2 * p + 1) -
                     binom(l - p - 1, 2 * p - 1) * std::pow(b, 2 * p - 1)) *
                    (mpow(g2, l - 3 * p) * mpow(g3, 2 * p));
        for (int p = 0; 3 * p <= l - 2; ++p)
          expect += binom(l - p - 1, 2 * p + 1) * std::pow(b, 2 * p + 1) *
                    (g1 * mpow(g2, l - 3 * p - 2) * mpow(g3, 2 * p + 1));
      }
      std::string where;
      double resid = max_diff<Mat>(fam.Z[L], expect, &where);
      out.push_back(close_report("closed-form-k3", graph_params(g) + ";L=" + std::to_string(L),
                                 resid, tol, start, where));
    }
  }
  return out;
}

ReportList verify_markov(const GraphRep& g, const TraceFamily& fam, double tol) {
  ReportList out;
  const int k = g.rl.k;
  const double beta = g.rl.beta();
  FaceWeights fw(g);
  auto start = Clock::now();
  double resid = 0.0;
  std::string where;
  double pk2 = cheb_eval(k - 2, beta);
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b) {
      if (!g.G[1](a, b)) continue;
      double sum = 0.0;
      for (int c = 0; c < g.size(); ++c)
        if (g.G[1](b, c)) sum += fw.diag(a, b, c) * g.psi(c);
      double d = std::abs(sum - pk2 * g.psi(b));
      if (d > resid)
        resid = d, where = "edge=(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
  out.push_back(close_report("markov-edge", graph_params(g), resid, tol, start, where));
  start = Clock::now();
  resid = 0.0;
  where.clear();
  double pk1 = cheb_eval(k - 1, beta);
  for (int L = 1; L <= fam.Lmax(); ++L) {
    double expect = pk1 * std::pow(pk2, L - 1);
    double d = std::abs(markov_average(g, fam.Z[L]) - expect);
    if (d > resid) resid = d, where = "L=" + std::to_string(L);
  }
  out.push_back(close_report("markov-average", graph_params(g) + ";Lmax=" +
                             std::to_string(fam.Lmax()), resid, tol, start, where));
  return out;
}

ReportList verify_universality(const GraphRep& ade, int Lmax, double tol) {
  ReportList out;
  if (ade.rl.k != 2)
    throw std::invalid_argument("verify_universality: k=2 graph required");
  GraphRep basic = basic_graph(ade.rl);
  TraceFamily fa = build_traces(basic, Lmax);
  TraceFamily fg = build_traces(ade, Lmax);
  std::vector<IMat> v = ade_v_family(ade);
  const int one = basic.unit_vertex();
  for (int L = 1; L <= Lmax; ++L) {
    auto start = Clock::now();
    CMat ez = CMat::Zero(ade.size(), ade.size());
    CMat et = CMat::Zero(ade.size(), ade.size());
    for (int lam = 0; lam < basic.size(); ++lam) {
      CMat vc = v[lam].cast<std::complex<double>>();
      ez += std::complex<double>(fa.Z[L](one, lam)) * vc;
      et += fa.Zt[L](one, lam) * vc;
    }
    std::string where, w2;
    double rz = max_diff<CMat>(fg.Z[L].cast<std::complex<double>>(), ez, &where);
    double rt = max_diff<CMat>(fg.Zt[L], et, &w2);
    if (rt > rz) where = w2;
    out.push_back(close_report("universality", graph_params(ade) + ";L=" + std::to_string(L),
                               std::max(rz, rt), tol, start, where));
  }
  return out;
}

ReportList verify_trig_identity(const RankLevel& rl, double tol) {
  ReportList out;
  if (rl.k != 3) throw std::invalid_argument("verify_trig_identity: k=3 required");
  auto start = Clock::now();
  const double beta = rl.beta();
  auto s = [&](int x) { return rl.sin_frac(x); };
  double resid = 0.0;
  int checked = 0, skipped = 0;
  std::string where;
  for (const Weight& a : enumerate_weights(rl)) {
    for (int alpha = 1; alpha <= 3; ++alpha) {
      bool wall = false;
      double total = 0.0;
      for (int b = 1; b <= 3 && !wall; ++b) {
        if (b == alpha) continue;
        int c = 6 - alpha - b;  // the remaining direction
        int aab = pair_e_diff(rl, alpha, b, a);
        int abc = pair_e_diff(rl, b, c, a);
        int aca = pair_e_diff(rl, c, alpha, a);
        int aac = pair_e_diff(rl, alpha, c, a);
        if (std::abs(s(aab)) < 1e-8 || std::abs(s(abc)) < 1e-8 ||
            std::abs(s(aca - 1)) < 1e-8 || std::abs(s(aac + 1)) < 1e-8) {
          wall = true;
          break;
        }
        total += (s(aab + 1) / s(aab)) * (s(abc + 1) / s(abc)) * (s(aca) / s(aca - 1)) +
                 s(aac + 2) / s(aac + 1) - s(aab + 1) / s(aab);
      }
      if (wall) {
        ++skipped;
        continue;
      }
      ++checked;
      double d = std::abs(total - beta);
      if (d > resid) {
        resid = d;
        where = "alpha=" + std::to_string(alpha);
      }
    }
  }
  std::string params = "k=3;n=" + std::to_string(rl.n) + ";checked=" +
                       std::to_string(checked) + ";skipped=" + std::to_string(skipped);
  out.push_back(close_report("trig-identity", params, resid, tol, start, where));
  return out;
}

ReportList verify_quotient_chain(const GraphRep& g, int L, double tol) {
  ReportList out;
  const int k = g.rl.k;
  if (k > 3) throw std::invalid_argument("verify_quotient_chain: k must be 2 or 3");
  if (L < k + 2) throw std::invalid_argument("verify_quotient_chain: need L >= k+2");
  const auto q = g.rl.q();
  FaceWeights fw(g);
  auto start = Clock::now();
  double resid_op = 0.0, resid_tr = 0.0;
  for (auto [a0, aL] : endpoint_sample(g, L)) {
    PathSpace ps = build_path_space(g, a0, aL, L);
    if (ps.dim() == 0) continue;
    std::vector<SparseC> gi;
    for (int i = 1; i <= L - 1; ++i) gi.push_back(build_g(ps, fw, i));
    SparseC anti;
    anti.n = ps.dim();
    anti.rows.resize(ps.dim());
    std::vector<int> perm(k + 1);
    for (int i = 0; i <= k; ++i) perm[i] = i;
    do {
      std::vector<int> word = reduced_word(perm);
      SparseC prod = SparseC::identity(ps.dim());
      for (int w : word) prod = prod.mul(gi[w - 1]);
      anti = axpy(1.0, anti, qpow(-q, -static_cast<int>(word.size())), prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    resid_op = std::max(resid_op, anti.max_abs());
    SparseC tail = SparseC::identity(ps.dim());
    for (int i = k + 1; i <= L - 1; ++i) tail = tail.mul(gi[i - 1]);
    resid_tr = std::max(resid_tr, std::abs(pair_trace(anti, tail)));
  }
  std::string params = graph_params(g) + ";L=" + std::to_string(L);
  out.push_back(close_report("antisym-annihilation", params, resid_op, tol, start));
  out.push_back(close_report("antisym-trace", params, resid_tr, tol, start));
  // the matching combination of the Ztilde's
  start = Clock::now();
  TraceFamily fam = build_traces(g, L);
  CMat comb = CMat::Zero(g.size(), g.size());
  for (int l = 0; l <= k; ++l) comb += qpow(-q, l) * (fam.Zt[L - l] * fc(g, l));
  std::string where;
  double resid = max_diff<CMat>(comb, CMat::Zero(g.size(), g.size()), &where);
  out.push_back(close_report("antisym-combination", params, resid, tol, start, where));
  return out;
}

ReportList verify_partial_trace(const GraphRep& g, double tol) {
  ReportList out;
  if (g.rl.k != 3) throw std::invalid_argument("verify_partial_trace: k=3 required");
  auto start = Clock::now();
  FaceWeights fw(g);
  Mat g2 = fd(g, 2), g3 = fd(g, 3);
  const double beta = g.rl.beta();
  double resid = 0.0;
  std::string where;
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b) {
      if (!g.G[1](a, b)) continue;
      for (int e = 0; e < g.size(); ++e) {
        double lhs = partial_trace_edge(g, 4, a, b, e);
        double z2part = 0.0;
        for (int c = 0; c < g.size(); ++c)
          if (g.G[1](b, c)) z2part += fw.diag(a, b, c) * g2(c, e);
        double d = std::abs(lhs - z2part - beta * g3(b, e));
        if (d > resid) {
          resid = d;
          where = "a=" + std::to_string(a) + ";b=" + std::to_string(b) +
                  ";e=" + std::to_string(e);
        }
      }
    }
  out.push_back(close_report("partial-trace", graph_params(g), resid, tol, start, where));
  return out;
}

ReportList verify_fusion_ring(const GraphRep& g) {
  ReportList out;
  auto start = Clock::now();
  FusionBasis basis = build_fusion_basis(g);
  FusionRingReport r = check_fusion_ring(g, basis);
  IdentityReport rep;
  rep.id = "fusion-ring";
  rep.params = graph_params(g) +
               (r.exhaustive_closure ? ";closure=exhaustive" : ";closure=generators");
  rep.residual = r.ok ? 0.0 : 1.0;  // exact integer checks, no tolerance
  rep.tol = 0.0;
  rep.pass = r.ok;
  rep.seconds = elapsed(start);
  rep.detail = r.detail;
  out.push_back(rep);
  return out;
}

}  // namespace hk
