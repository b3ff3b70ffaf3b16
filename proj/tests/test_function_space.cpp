#include <doctest.h>

#include <cmath>

#include "ured/errors.hpp"
#include "ured/generate.hpp"
#include "ured/indices.hpp"
#include "ured/norms.hpp"

using namespace ured;

namespace {

function_vector fv(std::vector<rational> values) { return function_vector(std::move(values)); }

}  // namespace

TEST_CASE("norm evaluation") {
  const auto mu2 = uniform_measure(2);
  const auto triple2 = norm_spec::triple_spec(mu2);

  CHECK(sup_norm(fv({rational(2), rational(-3)})) == rational(3));
  CHECK(norm(norm_spec::sup_spec(), fv({rational(2), rational(-3)})) == 3.0);

  // Constant one: sup 1 and integral 1, so the renorm squares to 2.
  const auto ones = fv({rational(1), rational(1)});
  CHECK(norm_squared_exact(triple2, ones) == rational(2));
  CHECK(norm(triple2, ones) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  // (1, 0) under uniform measure on two points: 1 + 1/2 under the root.
  const auto e0 = fv({rational(1), rational(0)});
  CHECK(norm_squared_exact(triple2, e0) == rational(3, 2));
  CHECK(norm(triple2, e0) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));

  CHECK(norm_squared_exact(norm_spec::euclidean_spec(), fv({rational(3), rational(4)})) ==
        rational(25));

  // Ground mismatch is an error.
  CHECK_THROWS_AS(l2_squared(uniform_measure(3), ones), input_error);
}

TEST_CASE("truncation split") {
  const auto g = fv({rational(2), rational(-3)});
  const auto t = truncate_decompose(g);
  CHECK(t.inner == fv({rational(1), rational(-1)}));
  CHECK(t.outer == fv({rational(1), rational(-2)}));
  CHECK(sup_norm(t.outer) == rational(2));  // (3 - 1)^+

  const auto small = fv({rational(1, 2), rational(-1)});
  const auto ts = truncate_decompose(small);
  CHECK(ts.inner == small);
  CHECK(sup_norm(ts.outer) == rational(0));

  const auto zero = fv({rational(0), rational(0)});
  const auto tz = truncate_decompose(zero);
  CHECK(tz.inner == zero);
  CHECK(tz.outer == zero);

  rng gen = rng::from_seed(2);
  for (int trial = 0; trial < 100; ++trial) {
    auto stream = gen.derive(static_cast<std::uint64_t>(trial));
    const auto f = random_function(stream, 5, 4, 5);
    const auto parts = truncate_decompose(f);
    CHECK(parts.inner + parts.outer == f);
    const rational sup = sup_norm(f);
    const rational expected = sup > 1 ? sup - 1 : rational(0);
    CHECK(sup_norm(parts.outer) == expected);
    CHECK(sup_norm(parts.inner) <= 1);
  }
}

TEST_CASE("bump functions") {
  const auto g0 = point_set::from_indices(3, std::array{0});
  CHECK(indicator_bump(g0) == fv({rational(1), rational(0), rational(0)}));

  point_set full(3);
  for (int p = 0; p < 3; ++p) full.add(p);
  CHECK(indicator_bump(full) == fv({rational(1), rational(1), rational(1)}));

  CHECK_THROWS_AS(indicator_bump(point_set(3)), input_error);

  const auto g01 = point_set::from_indices(3, std::array{0, 1});
  CHECK_NOTHROW(validate_bump(fv({rational(1), rational(1, 2), rational(0)}), g01));
  CHECK_THROWS_AS(validate_bump(fv({rational(1), rational(0), rational(1, 2)}), g01),
                  input_error);
  CHECK_THROWS_AS(validate_bump(fv({rational(1, 2), rational(0), rational(0)}), g01),
                  input_error);
  // The range check additionally rejects values outside [0, 1].
  CHECK_NOTHROW(validate_bump(fv({rational(-1), rational(1), rational(0)}), g01));
  CHECK_THROWS_AS(validate_bump_range(fv({rational(-1), rational(1), rational(0)}), g01),
                  input_error);
}

TEST_CASE("bump sums stay below the intersection degree") {
  rng gen = rng::from_seed(17);
  for (int trial = 0; trial < 60; ++trial) {
    auto stream = gen.derive(static_cast<std::uint64_t>(trial));
    const auto family = random_family(stream, 2, 8, 2, 8);
    const int l = max_degree(family).value;

    function_vector h(family.ground.size);
    for (const auto& s : family.sets) h = h + indicator_bump(s);
    CHECK(sup_norm(h) == l);  // indicators make the degree bound tight
    for (int k = 0; k < family.size(); ++k) {
      const auto h_k = h - indicator_bump(family.sets[k]);
      CHECK(sup_norm(h_k) <= l);
    }
  }
}

TEST_CASE("squared sup norm is convex: parallelogram-type bound") {
  rng gen = rng::from_seed(23);
  for (int trial = 0; trial < 200; ++trial) {
    auto stream = gen.derive(static_cast<std::uint64_t>(trial));
    const int n = static_cast<int>(stream.next_int(1, 6));
    const auto x = random_function(stream, n, 3, 4);
    const auto y = random_function(stream, n, 3, 4);
    const rational plus = sup_norm(x + y), minus = sup_norm(x - y);
    const rational lhs = plus * plus + minus * minus;
    const rational ny = sup_norm(y), nx = sup_norm(x);
    CHECK(lhs >= 2 * ny * ny);
    CHECK(lhs >= 2 * nx * nx);
  }
}

TEST_CASE("the renorm dominates the sup norm within sqrt(2)") {
  rng gen = rng::from_seed(29);
  for (int trial = 0; trial < 100; ++trial) {
    auto stream = gen.derive(static_cast<std::uint64_t>(trial));
    const int n = static_cast<int>(stream.next_int(1, 6));
    const auto mu = random_positive_probability(stream, n);
    const auto f = random_function(stream, n, 3, 4);
    const rational sup_sq = sup_norm(f) * sup_norm(f);
    const rational triple_sq = norm_squared_exact(norm_spec::triple_spec(mu), f);
    CHECK(sup_sq <= triple_sq);
    CHECK(triple_sq <= 2 * sup_sq);
  }
}
