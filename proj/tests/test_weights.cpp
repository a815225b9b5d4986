#include <doctest.h>

#include "heckepaths/weights.hpp"

using namespace hk;

TEST_CASE("weight enumeration") {
  RankLevel rl24(2, 4);
  auto w = enumerate_weights(rl24);
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Weight{1});
  CHECK(w[1] == Weight{2});
  CHECK(w[2] == Weight{3});

  CHECK(enumerate_weights(RankLevel(3, 5)).size() == 6);
  CHECK(enumerate_weights(RankLevel(3, 6)).size() == 10);
  CHECK(enumerate_weights(RankLevel(4, 7)).size() == 20);

  for (const auto& v : enumerate_weights(RankLevel(4, 9))) CHECK(admissible(RankLevel(4, 9), v));
  CHECK_FALSE(admissible(rl24, Weight{0}));
  CHECK_FALSE(admissible(rl24, Weight{4}));
  CHECK(unit_weight(RankLevel(3, 6)) == Weight{1, 1});
}

TEST_CASE("pairings") {
  RankLevel rl(3, 9);
  Weight b{2, 3};
  CHECK(pair_e_diff(rl, 1, 2, b) == 2);
  CHECK(pair_e_diff(rl, 2, 3, b) == 3);
  CHECK(pair_e_diff(rl, 1, 3, b) == 5);
  CHECK(pair_e_diff(rl, 2, 1, b) == -2);
  CHECK(pair_e_diff(rl, 1, 1, b) == 0);
  // positive for alpha < beta on admissible weights
  for (const auto& v : enumerate_weights(rl))
    for (int a = 1; a <= 3; ++a)
      for (int c = a + 1; c <= 3; ++c) {
        CHECK(pair_e_diff(rl, a, c, v) >= 1);
        CHECK(pair_e_diff(rl, a, c, v) <= rl.n - 1);
      }
  CHECK(s_value(rl, 1, 2, b) == doctest::Approx(std::sin(2 * M_PI / 9)));
}

TEST_CASE("weight shifts") {
  RankLevel rl(3, 5);
  Weight one{1, 1};
  auto up = shift_by_e(rl, one, 1);
  REQUIRE(up.has_value());
  CHECK(*up == Weight{2, 1});
  CHECK_FALSE(shift_by_e(rl, one, 2).has_value());  // lambda_1 would drop to 0
  CHECK_FALSE(shift_by_e(rl, one, 3).has_value());
  auto mid = shift_by_e(rl, Weight{2, 1}, 2);
  REQUIRE(mid.has_value());
  CHECK(*mid == Weight{1, 2});
}

TEST_CASE("partitions") {
  RankLevel rl(3, 9);
  Partition p = weight_to_partition(rl, Weight{2, 3});
  CHECK(p == Partition{3, 2});
  auto back = partition_to_weight(rl, p);
  REQUIRE(back.has_value());
  CHECK(*back == Weight{2, 3});
  CHECK(conjugate_partition({3, 2}) == Partition{2, 2, 1});
  CHECK(weight_to_partition(rl, Weight{1, 1}).empty());

  CHECK_FALSE(reduce_partition(2, {2, 2, 1}).has_value());  // column of height 3
  auto r = reduce_partition(3, {2, 2, 1});
  REQUIRE(r.has_value());
  CHECK(*r == Partition{1, 1});
  auto hook = reduce_partition(3, {4, 1, 1});  // first column has height k
  REQUIRE(hook.has_value());
  CHECK(*hook == Partition{3});
  CHECK(reduce_partition(4, {2, 1}).value() == Partition{2, 1});
}
