#include <doctest.h>

#include <complex>

#include "heckepaths/hecke.hpp"

using namespace hk;

TEST_CASE("path space enumeration") {
  GraphRep g = basic_graph(RankLevel(2, 4));
  PathSpace ps = build_path_space(g, 0, 0, 4);
  CHECK(ps.dim() == 2);  // 0-1-0-1-0 and 0-1-2-1-0
  for (const auto& p : ps.basis) {
    CHECK(p.front() == 0);
    CHECK(p.back() == 0);
    for (size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.G[1](p[i], p[i + 1]) == 1);
  }
  CHECK(ps.find(ps.basis[1]) == 1);
  CHECK(ps.find({0, 1, 0, 1, 1}) == -1);

  auto spaces = build_path_spaces_from(g, 0, 4);
  int total = 0;
  for (const auto& s : spaces) total += s.dim();
  IMat p4 = g.G[1] * g.G[1] * g.G[1] * g.G[1];
  CHECK(total == p4.row(0).sum());
  CHECK_THROWS_AS(build_path_space(g, 0, 0, 10, 3), CapExceeded);
}

TEST_CASE("face weight symmetries") {
  GraphRep g = basic_graph(RankLevel(3, 7));
  FaceWeights fw(g);
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b) {
      if (!g.G[1](a, b)) continue;
      for (int c = 0; c < g.size(); ++c) {
        if (!g.G[1](b, c)) continue;
        CHECK(fw.diag(a, b, c) == doctest::Approx(fw.diamond(a, b, b, c)));
        for (int bp = 0; bp < g.size(); ++bp) {
          if (!g.G[1](a, bp) || !g.G[1](bp, c)) continue;
          CHECK(fw.diamond(a, b, bp, c) == doctest::Approx(fw.diamond(a, bp, b, c)));
        }
      }
    }
}

TEST_CASE("U is symmetric and satisfies the quadratic relation") {
  GraphRep g = basic_graph(RankLevel(3, 6));
  FaceWeights fw(g);
  auto pairs = endpoint_sample(g, 5);
  REQUIRE_FALSE(pairs.empty());
  PathSpace ps = build_path_space(g, pairs[0].first, pairs[0].second, 5);
  REQUIRE(ps.dim() > 0);
  const double beta = g.rl.beta();
  for (int i = 1; i <= 4; ++i) {
    SparseD u = build_u(ps, fw, i);
    for (int r = 0; r < u.n; ++r)
      for (const auto& [c, v] : u.rows[r]) CHECK(u.get(c, r) == doctest::Approx(v));
    SparseD sq = u.mul(u);
    for (int r = 0; r < u.n; ++r)
      for (int c = 0; c < u.n; ++c)
        CHECK(sq.get(r, c) == doctest::Approx(beta * u.get(r, c)).epsilon(1e-10));
  }
}

TEST_CASE("reduced words") {
  CHECK(reduced_word({0, 1, 2}).empty());
  CHECK(reduced_word({1, 0, 2}) == std::vector<int>{1});
  CHECK(reduced_word({2, 1, 0}).size() == 3);
  CHECK(reduced_word({1, 2, 3, 0}).size() == 3);
}

TEST_CASE("two reduced words of the longest element agree") {
  GraphRep g = basic_graph(RankLevel(3, 6));
  FaceWeights fw(g);
  auto pairs = endpoint_sample(g, 4);
  REQUIRE_FALSE(pairs.empty());
  PathSpace ps = build_path_space(g, pairs[0].first, pairs[0].second, 4);
  REQUIRE(ps.dim() > 0);
  SparseC g1 = build_g(ps, fw, 1), g2 = build_g(ps, fw, 2);
  SparseC a = g1.mul(g2).mul(g1), b = g2.mul(g1).mul(g2);
  double d = 0;
  for (int r = 0; r < a.n; ++r)
    for (int c = 0; c < a.n; ++c) d = std::max(d, std::abs(a.get(r, c) - b.get(r, c)));
  CHECK(d < 1e-12);
}

TEST_CASE("relation and quotient checks pass") {
  for (auto [k, n] : {std::pair{2, 5}, {3, 6}, {4, 7}}) {
    GraphRep g = basic_graph(RankLevel(k, n));
    RelationReport r = check_hecke_relations(g, 5);
    INFO("k=", k, " n=", n, " ", r.detail);
    CHECK(r.pass);
  }
  RelationReport d4 = check_hecke_relations(ade_graph("D4"), 5);
  CHECK(d4.pass);
  CHECK(check_quotient(basic_graph(RankLevel(2, 5)), 4).pass);
  CHECK(check_quotient(basic_graph(RankLevel(3, 6)), 5).pass);
  CHECK(check_quotient(ade_graph("E6"), 4).pass);
  CHECK_THROWS(check_quotient(basic_graph(RankLevel(3, 6)), 3));
}

TEST_CASE("sparse helpers") {
  SparseC a = SparseC::identity(3);
  SparseC b = axpy(2.0, a, std::complex<double>(0, 1), a);
  CHECK(std::abs(b.get(0, 0) - std::complex<double>(2, 1)) < 1e-15);
  CHECK(std::abs(pair_trace(a, b) - std::complex<double>(6, 3)) < 1e-15);
  CHECK(a.mul(b).max_abs() == doctest::Approx(std::abs(std::complex<double>(2, 1))));
}
