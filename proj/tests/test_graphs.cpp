#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "heckepaths/graphs.hpp"

using namespace hk;

TEST_CASE("basic k=2 is a chain") {
  GraphRep g = basic_graph(RankLevel(2, 4));
  REQUIRE(g.size() == 3);
  IMat a = IMat::Zero(3, 3);
  a(0, 1) = a(1, 0) = a(1, 2) = a(2, 1) = 1;
  CHECK(g.G[1] == a);
  CHECK(g.G[0] == IMat::Identity(3, 3));
  CHECK(g.G[2] == IMat::Identity(3, 3));
  CHECK(g.psi_eig == doctest::Approx(std::sqrt(2.0)));
  // psi proportional to sin(pi j / 4)
  double s = std::sin(M_PI / 4);
  Eigen::Vector3d expect(s, 1.0, s);
  expect.normalize();
  CHECK((g.psi - expect).lpNorm<Eigen::Infinity>() < 1e-12);
  CHECK(g.unit_vertex() == 0);
}

TEST_CASE("basic k=3 structure") {
  GraphRep g = basic_graph(RankLevel(3, 6));
  REQUIRE(g.size() == 10);
  // G_2 steps by two distinct directions: the conjugate of G_1
  CHECK(g.G[2] == IMat(g.G[1].transpose()));
  // every vertex has at most k outgoing steps
  for (int a = 0; a < g.size(); ++a) CHECK(g.G[1].row(a).sum() <= 3);
  // Perron eigenvalue is the q-integer [3] = sin(3 pi/6)/sin(pi/6) = 2
  CHECK(g.psi_eig == doctest::Approx(2.0));
  CHECK(g.fused(4).isZero());
  CHECK(g.fused(3) == IMat::Identity(10, 10));
  Eigen::VectorXd r = g.G[1].cast<double>() * g.psi - g.psi_eig * g.psi;
  CHECK(r.lpNorm<Eigen::Infinity>() < 1e-11);
  CHECK(g.psi.minCoeff() > 0);
  CHECK(g.psi.norm() == doctest::Approx(1.0));
}

TEST_CASE("ADE graphs") {
  GraphRep d4 = ade_graph("D4");
  REQUIRE(d4.size() == 4);
  CHECK(d4.rl.n == 6);
  CHECK(d4.G[1].sum() == 6);  // three undirected edges
  CHECK(d4.psi_eig == doctest::Approx(std::sqrt(3.0)));
  // the hub of the star is vertex 2 (third along the chain)
  CHECK(d4.G[1].row(1).sum() == 3);

  CHECK(ade_graph("A5").rl.n == 6);
  CHECK(ade_graph("E6").rl.n == 12);
  CHECK(ade_graph("E7").rl.n == 18);
  CHECK(ade_graph("E8").rl.n == 30);
  CHECK_THROWS(ade_graph("F4"));
  CHECK_THROWS(ade_graph("D3"));

  // A_{n-1} coincides with the basic k=2 graph
  GraphRep a5 = ade_graph("A5");
  GraphRep b = basic_graph(RankLevel(2, 6));
  CHECK(a5.G[1] == b.G[1]);
  CHECK((a5.psi - b.psi).lpNorm<Eigen::Infinity>() < 1e-12);
}

TEST_CASE("json dump") {
  GraphRep g = basic_graph(RankLevel(3, 5));
  auto j = nlohmann::json::parse(graph_to_json(g));
  CHECK(j["kind"] == "basic");
  CHECK(j["k"] == 3);
  CHECK(j["n"] == 5);
  CHECK(j["vertices"].size() == 6);
  CHECK(j["G"].size() == 4);
  CHECK(j["psi"].size() == 6);
}
