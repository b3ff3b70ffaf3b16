#include <doctest.h>

#include "ured/errors.hpp"
#include "ured/generate.hpp"
#include "ured/indices.hpp"
#include "ured/intersection_lp.hpp"
#include "ured/simplex.hpp"

using namespace ured;
using lp::relation;

namespace {

lp::problem make_problem(std::vector<std::vector<rational>> coeffs, std::vector<relation> rels,
                         std::vector<rational> rhs, std::vector<rational> objective) {
  return {std::move(coeffs), std::move(rels), std::move(rhs), std::move(objective)};
}

}  // namespace

TEST_CASE("simplex solves small programs exactly") {
  // max x + y, x <= 2, y <= 3
  auto sol = lp::maximize(make_problem({{1, 0}, {0, 1}},
                                       {relation::less_equal, relation::less_equal},
                                       {rational(2), rational(3)}, {rational(1), rational(1)}));
  REQUIRE(sol.status == lp::lp_status::optimal);
  CHECK(sol.value == rational(5));
  CHECK(sol.x == std::vector<rational>{rational(2), rational(3)});

  // Equality plus redundancy: max x, x + y = 1, x + y <= 1.
  sol = lp::maximize(make_problem({{1, 1}, {1, 1}}, {relation::equal, relation::less_equal},
                                  {rational(1), rational(1)}, {rational(1), rational(0)}));
  REQUIRE(sol.status == lp::lp_status::optimal);
  CHECK(sol.value == rational(1));

  // Unbounded: max x with x >= 1.
  sol = lp::maximize(make_problem({{1}}, {relation::greater_equal}, {rational(1)}, {rational(1)}));
  CHECK(sol.status == lp::lp_status::unbounded);

  // Infeasible: x <= -1 with x >= 0.
  sol = lp::maximize(make_problem({{1}}, {relation::less_equal}, {rational(-1)}, {rational(1)}));
  CHECK(sol.status == lp::lp_status::infeasible);

  // Fractional optimum: max x + y with 2x + y <= 2, x + 2y <= 2.
  sol = lp::maximize(make_problem({{2, 1}, {1, 2}},
                                  {relation::less_equal, relation::less_equal},
                                  {rational(2), rational(2)}, {rational(1), rational(1)}));
  REQUIRE(sol.status == lp::lp_status::optimal);
  CHECK(sol.value == rational(4, 3));
}

TEST_CASE("max-min measure on named families") {
  const auto tri = max_min_measure(triangle_family());
  CHECK(tri.value == rational(2, 3));
  rational dual_sum = 0;
  for (const auto& w : tri.dual) dual_sum += w;
  CHECK(dual_sum == 1);

  for (const int m : {2, 3, 6}) {
    const auto cert = max_min_measure(disjoint_family(m));
    CHECK(cert.value == rational(1, m));
  }

  const auto common = max_min_measure(common_point_family(4, 5));
  CHECK(common.value == rational(1));
}

TEST_CASE("the repetition index can undercut the subfamily index") {
  // Hub-and-rim family: LP value 3/5 but weak intersection number 2/3, so
  // the two indices genuinely differ and sequences with repetition win.
  set_family family;
  family.ground.size = 4;
  family.sets.push_back(point_set::from_indices(4, std::array{0, 1}));
  family.sets.push_back(point_set::from_indices(4, std::array{0, 2}));
  family.sets.push_back(point_set::from_indices(4, std::array{0, 3}));
  family.sets.push_back(point_set::from_indices(4, std::array{1, 2, 3}));

  const auto cert = max_min_measure(family);
  CHECK(cert.value == rational(3, 5));
  CHECK(weak_intersection_number(family).value == rational(2, 3));

  const auto rep = kelley_number_rep(family, 5);
  CHECK(rep.value == rational(3, 5));
  CHECK(rep.length == 5);
  CHECK(rep.multiplicity == std::vector<int>{1, 1, 1, 2});
}

TEST_CASE("sequence search on named families") {
  for (const int len : {1, 3, 6}) {
    const auto rep = kelley_number_rep(common_point_family(4, 5), len);
    CHECK(rep.value == rational(1));
  }
  CHECK(kelley_number_rep(disjoint_family(4), 4).value == rational(1, 4));
  CHECK(kelley_number_rep(disjoint_family(4), 6).value == rational(1, 4));
  CHECK(kelley_number_rep(triangle_family(), 6).value == rational(2, 3));
  CHECK_THROWS_AS(kelley_number_rep(triangle_family(), 0), input_error);

  // Nonincreasing in the length cap, never below the LP value.
  rng gen = rng::from_seed(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto stream = gen.derive(static_cast<std::uint64_t>(trial));
    const auto family = random_family(stream, 2, 6, 2, 5);
    const auto lp_value = max_min_measure(family).value;
    rational prev;
    for (int len = 1; len <= 8; ++len) {
      const auto rep = kelley_number_rep(family, len);
      if (len > 1) CHECK(rep.value <= prev);
      CHECK(rep.value >= lp_value);
      prev = rep.value;
    }
  }
}

TEST_CASE("duality verification") {
  auto report = verify_duality(triangle_family(), 6);
  CHECK(report.primal_dual_equal);
  CHECK(report.gap == rational(0));

  report = verify_duality(disjoint_family(2), 2);
  CHECK(report.primal_dual_equal);
  CHECK(report.lp_value == rational(1, 2));
  CHECK(report.gap == rational(0));

  set_family single;
  single.ground.size = 3;
  single.sets.push_back(point_set::from_indices(3, std::array{1, 2}));
  report = verify_duality(single, 3);
  CHECK(report.lp_value == rational(1));
  CHECK(report.gap == rational(0));
}

TEST_CASE("LP properties on random families") {
  rng gen = rng::from_seed(31);
  for (int trial = 0; trial < 60; ++trial) {
    auto stream = gen.derive(static_cast<std::uint64_t>(trial));
    const auto family = random_family(stream, 2, 8, 2, 8);
    const auto cert = max_min_measure(family);

    CHECK(cert.value <= 1);
    CHECK(cert.value > 0);

    // Value 1 exactly when the family has a common point.
    bool common = false;
    for (int p = 0; p < family.ground.size && !common; ++p) {
      common = true;
      for (const auto& s : family.sets) common = common && s.contains(p);
    }
    CHECK((cert.value == 1) == common);

    // Sequences with repetition reach at most the subfamily index and at
    // least the LP value.
    const auto win = weak_intersection_number(family).value;
    CHECK(cert.value <= win);
    const auto rep = kelley_number_rep(family, 8);
    CHECK(rep.value >= cert.value);
    CHECK(rep.value <= win);
  }
}
