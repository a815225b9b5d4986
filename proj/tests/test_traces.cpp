#include <doctest.h>

#include <random>

#include "heckepaths/chebyshev.hpp"
#include "heckepaths/traces.hpp"

using namespace hk;

namespace {

double cdiff(const CMat& a, const CMat& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("Z_1 is the adjacency") {
  GraphRep g = basic_graph(RankLevel(3, 6));
  CHECK((z_trace(g, 1) - g.G[1].cast<double>()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(cdiff(ztilde_trace(g, 1), g.G[1].cast<std::complex<double>>()) == 0.0);
}

TEST_CASE("k=2 closed values") {
  GraphRep g = basic_graph(RankLevel(2, 5));
  const double beta = g.rl.beta();
  Mat z2 = z_trace(g, 2);
  CHECK((z2 - beta * Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-14);
  Mat z3 = z_trace(g, 3);
  CHECK((z3 - g.G[1].cast<double>()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("serial and parallel kernels agree exactly") {
  GraphRep g = basic_graph(RankLevel(4, 9));
  for (int L : {2, 5, 9}) {
    CHECK((z_trace(g, L, true) - z_trace_serial(g, L)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(cdiff(ztilde_trace(g, L, true), ztilde_trace_serial(g, L)) == 0.0);
  }
  TraceFamily fam = build_traces(g, 9);
  CHECK((fam.Z[9] - z_trace(g, 9)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(cdiff(fam.Zt[9], ztilde_trace(g, 9)) == 0.0);
}

TEST_CASE("contraction matches the operator oracle") {
  for (auto [k, n] : {std::pair{2, 6}, {3, 6}, {3, 7}}) {
    GraphRep g = basic_graph(RankLevel(k, n));
    for (int L : {2, 4, 5}) {
      OracleTrace oz = trace_oracle(g, L, false);
      OracleTrace ot = trace_oracle(g, L, true);
      Mat z = z_trace(g, L);
      CMat zt = ztilde_trace(g, L);
      for (int r = 0; r < g.size(); ++r)
        for (int c = 0; c < g.size(); ++c) {
          REQUIRE(oz.computed[r][c]);
          CHECK(std::abs(oz.value(r, c) - std::complex<double>(z(r, c))) < 1e-11);
          CHECK(std::abs(ot.value(r, c) - zt(r, c)) < 1e-11);
        }
    }
  }
}

TEST_CASE("traces commute with the fused adjacencies") {
  GraphRep g = basic_graph(RankLevel(3, 7));
  TraceFamily fam = build_traces(g, 6);
  for (int L = 1; L <= 6; ++L)
    for (int l = 1; l <= 3; ++l) {
      Mat gl = g.G[l].cast<double>();
      CHECK((fam.Z[L] * gl - gl * fam.Z[L]).cwiseAbs().maxCoeff() < 1e-9);
      CMat glc = g.G[l].cast<std::complex<double>>();
      CHECK(cdiff(fam.Zt[L] * glc, glc * fam.Zt[L]) < 1e-9);
    }
}

TEST_CASE("word traces factorize") {
  GraphRep g = basic_graph(RankLevel(2, 5));
  TraceFamily fam = build_traces(g, 13);
  auto zc = [&](int l) { return CMat(fam.Z[l].cast<std::complex<double>>()); };

  CHECK(cdiff(word_trace(g, 4, {1, 3}, false), zc(2) * zc(2)) < 1e-12);
  CHECK(cdiff(word_trace(g, 5, {1, 4}, false), zc(2) * zc(1) * zc(2)) < 1e-12);
  CHECK(cdiff(word_trace(g, 13, {2, 4, 5, 8, 11}, false),
              zc(1) * zc(2) * zc(3) * zc(1) * zc(2) * zc(1) * zc(1) * zc(2)) < 1e-9);

  // randomized increasing words with gaps: runs [i..j] give Z_{j-i+2},
  // uncovered edges give Z_1 factors
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 12; ++trial) {
    int L = 6 + static_cast<int>(rng() % 7);
    std::vector<int> word;
    int i = 1;
    while (i <= L - 1) {
      if (rng() % 2) {
        word.push_back(i);
        i += 1;
      } else {
        i += 2;  // leave a gap so runs stay separated
      }
    }
    CMat expect = CMat::Identity(g.size(), g.size());
    int edge = 1;
    size_t w = 0;
    while (edge <= L) {
      if (w < word.size() && word[w] == edge) {
        size_t end = w;
        while (end + 1 < word.size() && word[end + 1] == word[end] + 1) ++end;
        int len = word[end] - word[w] + 2;
        expect *= zc(len);
        edge = word[end] + 2;
        w = end + 1;
      } else {
        expect *= zc(1);
        edge += 1;
      }
    }
    INFO("trial=", trial, " L=", L);
    CHECK(cdiff(word_trace(g, L, word, false), expect) < 1e-9);
  }
}

TEST_CASE("partial traces marginalize") {
  GraphRep g = basic_graph(RankLevel(3, 6));
  FaceWeights fw(g);
  Mat z5 = z_trace(g, 5);
  for (int a0 = 0; a0 < g.size(); ++a0)
    for (int aL = 0; aL < g.size(); ++aL) {
      double total = 0.0;
      for (int a1 = 0; a1 < g.size(); ++a1)
        if (g.G[1](a0, a1)) total += partial_trace_edge(g, 5, a0, a1, aL);
      CHECK(total == doctest::Approx(z5(a0, aL)).epsilon(1e-10));
    }
  // L=2 is a single diamond
  for (int a0 = 0; a0 < g.size(); ++a0)
    for (int a1 = 0; a1 < g.size(); ++a1) {
      if (!g.G[1](a0, a1)) continue;
      for (int a2 = 0; a2 < g.size(); ++a2) {
        if (!g.G[1](a1, a2)) continue;
        CHECK(partial_trace_edge(g, 2, a0, a1, a2) == doctest::Approx(fw.diag(a0, a1, a2)));
      }
    }
  CHECK_THROWS(partial_trace_edge(g, 3, 0, 0, 1));
}

TEST_CASE("markov averages") {
  GraphRep g = basic_graph(RankLevel(3, 6));
  CHECK(markov_average(g, Mat(Mat::Identity(g.size(), g.size()))) == doctest::Approx(1.0));
  const double beta = g.rl.beta();
  TraceFamily fam = build_traces(g, 7);
  for (int L = 1; L <= 7; ++L)
    CHECK(markov_average(g, fam.Z[L]) ==
          doctest::Approx(cheb_eval(2, beta) * std::pow(cheb_eval(1, beta), L - 1))
              .epsilon(1e-10));
  // k=2: every average is beta
  GraphRep h = ade_graph("D5");
  TraceFamily fh = build_traces(h, 6);
  for (int L = 1; L <= 6; ++L)
    CHECK(markov_average(h, fh.Z[L]) == doctest::Approx(h.rl.beta()).epsilon(1e-10));
}
