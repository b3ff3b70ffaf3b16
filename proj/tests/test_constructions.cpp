#include <doctest.h>

#include "ured/constructions.hpp"
#include "ured/errors.hpp"
#include "ured/generate.hpp"
#include "ured/indices.hpp"
#include "ured/martingale.hpp"

using namespace ured;

namespace {

function_vector constant(int n, const rational& value) {
  function_vector f(n);
  for (auto& v : f.values) v = value;
  return f;
}

}  // namespace

TEST_CASE("two-step construction on two disjoint singletons") {
  const auto family = disjoint_family(2);
  const auto zero = function_vector(2);
  const auto result = build_bump_martingale(family, zero);

  CHECK(result.l_value == 1);
  CHECK(result.bound == rational(2));  // max(0, 1) + 1/(2-1)
  CHECK(result.max_final_sup == rational(1));
  CHECK(result.mart.filt.atom_count() == 4);

  // With a zero start the drift vanishes: the final values are signed bumps.
  const auto increments = increments_at_level(result.mart, 2);
  for (const auto& d : increments) CHECK(sup_norm(d) == rational(1));
}

TEST_CASE("two-step construction with a common point and constant start") {
  const auto family = common_point_family(4, 5);
  const auto result = build_bump_martingale(family, constant(5, rational(1)));
  CHECK(result.l_value == 4);
  CHECK(result.bound == rational(1) + rational(4, 3));
  CHECK(result.max_final_sup <= result.bound);
}

TEST_CASE("two-step construction rejects bad inputs") {
  set_family tiny;
  tiny.ground.size = 2;
  tiny.sets.push_back(point_set::from_indices(2, std::array{0}));
  CHECK_THROWS_AS(build_bump_martingale(tiny, function_vector(2)), input_error);

  CHECK_THROWS_AS(build_bump_martingale(disjoint_family(2), function_vector(5)), input_error);
}

TEST_CASE("two-step construction accepts valid custom bumps") {
  set_family family;
  family.ground.size = 3;
  family.sets.push_back(point_set::from_indices(3, std::array{0, 1}));
  family.sets.push_back(point_set::from_indices(3, std::array{1, 2}));

  std::vector<function_vector> bumps;
  bumps.push_back(function_vector({rational(1), rational(1, 2), rational(0)}));
  bumps.push_back(function_vector({rational(0), rational(1, 2), rational(1)}));
  const auto g = function_vector({rational(1, 2), rational(-1), rational(2)});
  const auto result = build_bump_martingale(family, g, &bumps);
  CHECK(result.max_final_sup <= result.bound);

  // Signed range violation is rejected.
  bumps[0].values[1] = rational(-1, 2);
  CHECK_THROWS_AS(build_bump_martingale(family, g, &bumps), input_error);
}

TEST_CASE("construction certification over random inputs") {
  rng gen = rng::from_seed(6101);
  for (int trial = 0; trial < 150; ++trial) {
    auto stream = gen.derive(static_cast<std::uint64_t>(trial));
    const auto family = random_family(stream, 2, 8, 2, 8);
    const auto g = random_function(stream, family.ground.size, 3, 4);
    // The builder re-checks the martingale law, the pair structure, the
    // increment form, and the sup bound; reaching here means all held.
    const auto result = build_bump_martingale(family, g);
    CHECK(result.max_final_sup <= result.bound);
    CHECK(validate_martingale(result.mart).valid);
  }
}

TEST_CASE("composition reduces to the two-step construction at depth one") {
  const auto family = triangle_family();
  const auto g = constant(3, rational(1));
  const auto composed = compose_bump_martingales({family}, g);
  const auto single = build_bump_martingale(family, g);

  REQUIRE(composed.mart.levels.size() == 3);
  CHECK(composed.mart.levels[1].block_values == single.mart.levels[1].block_values);
  CHECK(composed.mart.levels[2].block_values == single.mart.levels[2].block_values);
  CHECK(composed.bound == single.bound);  // max(|g|,1) = 1 here
}

TEST_CASE("composition sizes and bound for q=2, m=3") {
  const auto family = triangle_family();
  const auto g = constant(3, rational(1));
  const auto result = compose_bump_martingales({family, family}, g);
  REQUIRE(result.mart.filt.levels.size() == 5);
  CHECK(result.mart.filt.levels[2].size() == 6);
  CHECK(result.mart.filt.levels[4].size() == 36);
  CHECK(result.mart.filt.atom_count() == 36);
  CHECK(result.bound == rational(3));  // 1 + 2/2 + 2/2
  CHECK(result.omega_even_full);
  CHECK(result.increments_in_family);
  CHECK(result.qualification);
}

TEST_CASE("composition of disjoint families") {
  const auto family = disjoint_family(3);
  const auto g = constant(3, rational(1));
  const auto result = compose_bump_martingales({family, family}, g);
  CHECK(result.bound == rational(2));  // 1 + 2 * (1/2)
  CHECK(result.max_final_sup <= rational(2));
}

TEST_CASE("composition demands a unit start function") {
  const auto family = disjoint_family(3);
  CHECK_THROWS_AS(compose_bump_martingales({family}, constant(3, rational(2))), input_error);
  CHECK_THROWS_AS(compose_bump_martingales({family}, function_vector(3)), input_error);
}

TEST_CASE("index bound report") {
  // One family of m disjoint sets: bound 1 + 1/(m-1).
  for (const int m : {2, 5, 9}) {
    const auto report = compute_index_bound({disjoint_family(m)});
    CHECK(report.bound == rational(1) + rational(1, m - 1));
    REQUIRE(report.witness_materialized);
    CHECK(report.witness->qualification);
  }

  // A family with a common point never certifies below 2.
  const auto common = compute_index_bound({common_point_family(4, 5)});
  CHECK(common.bound == rational(1) + rational(4, 3));
  CHECK(common.bound >= rational(2));

  // Ten families of eleven disjoint sets: bound exactly 2, witness far too
  // large to materialize.
  const std::vector<set_family> big(10, disjoint_family(11));
  const auto report = compute_index_bound(big);
  CHECK(report.bound == rational(2));
  CHECK_FALSE(report.witness_materialized);
  CHECK(report.witness_atoms == 0x16bcc41e90000ull);  // 22^10
}

TEST_CASE("qualification integral is one at every even level") {
  rng gen = rng::from_seed(77);
  auto stream = gen.derive("qual");
  const auto f1 = random_family(stream, 5, 5, 3, 3);
  const auto f2 = random_family(stream, 5, 5, 2, 2);
  const auto g = constant(5, rational(1));
  const auto result = compose_bump_martingales({f1, f2}, g);
  CHECK(result.qualification);

  for (int r = 1; r <= 2; ++r) {
    const auto increments = increments_at_level(result.mart, 2 * r);
    rational integral = 0;
    for (std::size_t bi = 0; bi < increments.size(); ++bi) {
      const rational s = sup_norm(increments[bi]);
      integral += result.mart.filt.block_mass(result.mart.filt.levels[2 * r].blocks[bi]) * s * s;
    }
    CHECK(integral == rational(1));
  }
}
