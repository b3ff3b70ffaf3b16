#include <doctest.h>

#include <algorithm>

#include "ured/errors.hpp"
#include "ured/generate.hpp"
#include "ured/indices.hpp"
#include "ured/oracle.hpp"

using namespace ured;

TEST_CASE("triangle family indices") {
  const auto family = triangle_family();
  const auto report = compute_indices(family);
  CHECK(report.l_value == 2);
  CHECK(report.gamma == std::vector<int>{1, 2, 2});
  CHECK(report.win_value == rational(2, 3));
  CHECK(*report.win_tilde_value == rational(1));
  CHECK(report.win_witness == std::vector<int>{0, 1, 2});
}

TEST_CASE("single set and disjoint families") {
  set_family single;
  single.ground.size = 2;
  single.sets.push_back(point_set::from_indices(2, std::array{0, 1}));
  CHECK(max_degree(single).value == 1);
  CHECK(weak_intersection_number(single).value == rational(1));
  CHECK_THROWS_WITH_AS(weak_intersection_number_tilde(single),
                       doctest::Contains("undefined for families of size < 2"), input_error);

  for (const int m : {2, 4, 7}) {
    const auto family = disjoint_family(m);
    const auto report = compute_indices(family);
    CHECK(report.l_value == 1);
    CHECK(report.win_value == rational(1, m));
    CHECK(*report.win_tilde_value == rational(1, m - 1));
    for (const int gamma : report.gamma) CHECK(gamma == 1);
  }
}

TEST_CASE("families with a common point") {
  const auto family = common_point_family(5, 6);
  const auto report = compute_indices(family);
  CHECK(report.l_value == 5);
  CHECK(report.l_witness_point == 0);
  for (int k = 1; k <= 5; ++k) CHECK(report.gamma[k - 1] == k);
  CHECK(report.win_value == rational(1));
  CHECK(*report.win_tilde_value == rational(5, 4));
}

TEST_CASE("error paths") {
  set_family empty;
  empty.ground.size = 3;
  CHECK_THROWS_WITH_AS(compute_indices(empty), "empty family", input_error);

  set_family with_empty;
  with_empty.ground.size = 3;
  with_empty.sets.push_back(point_set::from_indices(3, std::array{0}));
  with_empty.sets.push_back(point_set(3));
  CHECK_THROWS_WITH_AS(compute_indices(with_empty), "empty set in family", input_error);

  const auto tri = triangle_family();
  CHECK_THROWS_AS(min_subfamily_degree(tri, 0), input_error);
  CHECK_THROWS_AS(min_subfamily_degree(tri, 4), input_error);
}

TEST_CASE("optimized indices match the brute-force oracle") {
  rng gen = rng::from_seed(20240811);
  for (int trial = 0; trial < 120; ++trial) {
    auto stream = gen.derive(static_cast<std::uint64_t>(trial));
    const auto family = random_family(stream, 2, 9, 2, 10);
    const auto fast = compute_indices(family);
    const auto slow = brute_force_indices(family);
    REQUIRE(fast.l_value == slow.l_value);
    REQUIRE(fast.gamma == slow.gamma);
    REQUIRE(fast.win_value == slow.win_value);
    REQUIRE(*fast.win_tilde_value == *slow.win_tilde_value);
  }
}

TEST_CASE("index properties on random families") {
  rng gen = rng::from_seed(7);
  for (int trial = 0; trial < 80; ++trial) {
    auto stream = gen.derive(static_cast<std::uint64_t>(trial));
    const auto family = random_family(stream, 2, 10, 2, 10);
    const auto report = compute_indices(family);

    // gamma is nondecreasing in the subfamily size.
    CHECK(std::is_sorted(report.gamma.begin(), report.gamma.end()));

    // win <= win~ <= 2 win and win <= 1.
    CHECK(report.win_value <= *report.win_tilde_value);
    CHECK(*report.win_tilde_value <= 2 * report.win_value);
    CHECK(report.win_value <= 1);

    // win = 1 exactly when some point lies in every set.
    bool common = false;
    for (int p = 0; p < family.ground.size && !common; ++p) {
      common = true;
      for (const auto& s : family.sets) common = common && s.contains(p);
    }
    CHECK((report.win_value == 1) == common);

    // Order invariance: reversing the sets changes no value.
    set_family reversed = family;
    std::reverse(reversed.sets.begin(), reversed.sets.end());
    const auto mirrored = compute_indices(reversed);
    CHECK(mirrored.l_value == report.l_value);
    CHECK(mirrored.gamma == report.gamma);
    CHECK(mirrored.win_value == report.win_value);
    CHECK(*mirrored.win_tilde_value == *report.win_tilde_value);
  }
}

TEST_CASE("witnesses attain their values") {
  rng gen = rng::from_seed(99);
  for (int trial = 0; trial < 40; ++trial) {
    auto stream = gen.derive(static_cast<std::uint64_t>(trial));
    const auto family = random_family(stream, 2, 8, 2, 8);
    const auto report = compute_indices(family);

    set_family sub;
    sub.ground = family.ground;
    for (const int i : report.win_witness) sub.sets.push_back(family.sets[i]);
    CHECK(rational(max_degree(sub).value, sub.size()) == report.win_value);
  }
}
