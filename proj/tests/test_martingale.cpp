#include <doctest.h>

#include "ured/errors.hpp"
#include "ured/generate.hpp"
#include "ured/martingale.hpp"

using namespace ured;

namespace {

function_vector fv(std::vector<rational> values) { return function_vector(std::move(values)); }

/// Two atoms, one split; M_0 = base, M_1 = base +/- x with the given masses.
martingale two_point(const rational& mass_plus, const rational& mass_minus,
                     const function_vector& base, const function_vector& x) {
  martingale m;
  m.filt.atom_mass = {mass_plus, mass_minus};
  partition trivial;
  trivial.blocks.push_back({{0, 1}});
  partition split;
  split.blocks.push_back({{0}});
  split.blocks.push_back({{1}});
  m.filt.levels = {trivial, split};
  m.levels.resize(2);
  m.levels[0] = {0, {base}};
  m.levels[1] = {1, {base + x, base - x}};
  return m;
}

}  // namespace

TEST_CASE("two-point martingale validation") {
  const auto x = fv({rational(1), rational(-2)});
  const auto zero = fv({rational(0), rational(0)});

  const auto fair = two_point(rational(1, 2), rational(1, 2), zero, x);
  const auto report = validate_martingale(fair);
  CHECK(report.valid);
  CHECK(report.paley_pairs_checked == 1);

  // Unequal masses with symmetric values: the conditional mean is x/3 != 0.
  const auto skewed = two_point(rational(1, 3), rational(2, 3), zero, x);
  const auto bad = validate_martingale(skewed);
  CHECK_FALSE(bad.valid);
  REQUIRE_FALSE(bad.violations.empty());
  CHECK(bad.violations.front().find("conditional mean") != std::string::npos);
}

TEST_CASE("corrupted martingale is caught before monotonicity") {
  rng gen = rng::from_seed(3);
  auto m = random_martingale(gen, 3, 3);
  REQUIRE(validate_martingale(m).valid);
  // Shift one deep block value; the conditional mean above it must break.
  auto& target = m.levels.back().block_values.front();
  target = target + fv(std::vector<rational>(target.values.size(), rational(1)));
  CHECK_FALSE(validate_martingale(m).valid);
  CHECK_THROWS_AS(check_norm_square_monotone(m, norm_spec::sup_spec(), true), input_error);
}

TEST_CASE("walsh-paley structure") {
  const auto dyadic = dyadic_filtration(3);
  const auto wp = find_walsh_paley_pairs(dyadic);
  REQUIRE(wp.levels.size() == 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(wp.levels[k].omega_is_full);
    CHECK(static_cast<int>(wp.levels[k].pairs.size()) == 1 << k);
  }

  // A block split into three equal children yields no pairs.
  filtration three;
  three.atom_mass = {rational(1, 3), rational(1, 3), rational(1, 3)};
  partition trivial;
  trivial.blocks.push_back({{0, 1, 2}});
  partition split;
  split.blocks.push_back({{0}});
  split.blocks.push_back({{1}});
  split.blocks.push_back({{2}});
  three.levels = {trivial, split};
  const auto wp3 = find_walsh_paley_pairs(three);
  CHECK(wp3.levels[0].pairs.empty());
  CHECK(wp3.levels[0].omega_atoms.empty());
  CHECK_FALSE(wp3.levels[0].omega_is_full);

  // Equal-mass two-way splits are always paired, unequal ones never.
  filtration uneven;
  uneven.atom_mass = {rational(1, 3), rational(2, 3)};
  partition top;
  top.blocks.push_back({{0, 1}});
  partition bottom;
  bottom.blocks.push_back({{0}});
  bottom.blocks.push_back({{1}});
  uneven.levels = {top, bottom};
  CHECK(find_walsh_paley_pairs(uneven).levels[0].pairs.empty());
}

TEST_CASE("norm-square monotonicity") {
  const auto x = fv({rational(2), rational(-1)});
  const auto zero = fv({rational(0), rational(0)});
  const auto fair = two_point(rational(1, 2), rational(1, 2), zero, x);

  const auto exact = check_norm_square_monotone(fair, norm_spec::sup_spec(), true);
  CHECK(exact.holds);
  CHECK(exact.exact);
  // Slack at the root: E|M_1|^2 - |M_0|^2 = sup|x|^2 = 4.
  CHECK(exact.min_slack == 4.0);

  rng gen = rng::from_seed(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto stream = gen.derive(static_cast<std::uint64_t>(trial));
    const int ground = static_cast<int>(stream.next_int(2, 5));
    const auto m = random_martingale(stream, ground, static_cast<int>(stream.next_int(1, 4)));
    REQUIRE(validate_martingale(m).valid);

    CHECK(check_norm_square_monotone(m, norm_spec::sup_spec(), true).holds);
    CHECK(check_norm_square_monotone(m, norm_spec::euclidean_spec(), false).holds);
    const auto mu = random_positive_probability(stream, ground);
    CHECK(check_norm_square_monotone(m, norm_spec::l2_spec(mu), false).holds);
    CHECK(check_norm_square_monotone(m, norm_spec::triple_spec(mu), false).holds);
  }
}

TEST_CASE("energy gain: pair form with f = 0") {
  // E|f|^2 = 0 and flagged |g|^2 integral >= 2/t^2 force slack >= 3/t^2.
  const double t = 2.0;
  const auto g_plus = fv({rational(9, 10), rational(0)});
  const auto g_minus = fv({rational(-9, 10), rational(0)});
  const auto zero = fv({rational(0), rational(0)});
  const std::vector<rational> masses = {rational(1, 2), rational(1, 2)};
  const std::vector<function_vector> f = {zero, zero};
  const std::vector<function_vector> g = {g_plus, g_minus};
  const std::vector<bool> flags = {true, true};

  for (const int i : {1, 2, 5}) {
    const auto report =
        check_pair_energy_gain(norm_spec::sup_spec(), masses, f, g, i, t, flags);
    REQUIRE(report.applicable);  // integral 0.81 >= 2/4
    CHECK(report.holds);
    CHECK(report.slack >= 3.0 / (t * t) - 1e-12);
  }
}

TEST_CASE("energy gain: martingale form") {
  // Euclidean norm with i >= t^2: every vector passes the ratio floor
  // 1 + 1/t^2 >= 1 + 1/i, so flagging every atom is sound.
  const auto f0 = fv({rational(3, 10), rational(1, 10)});
  const auto g0 = fv({rational(4, 5), rational(-1, 5)});  // |g0|^2 = 17/25 >= 2/t^2
  const auto m = two_point(rational(1, 2), rational(1, 2), f0, g0);
  const double t = 2.0;
  const int i = 5;
  const auto report =
      check_energy_gain(m, 1, i, t, norm_spec::euclidean_spec(), {true, true});
  REQUIRE(report.applicable);
  CHECK(report.holds);
  CHECK(report.energy_curr >= report.energy_prev + report.required_gain - 1e-12);
}

TEST_CASE("energy gain: hypothesis failures are not counterexamples") {
  const auto f0 = fv({rational(0), rational(0)});
  const auto tiny = fv({rational(1, 10), rational(0)});
  const auto m = two_point(rational(1, 2), rational(1, 2), f0, tiny);
  const auto report =
      check_energy_gain(m, 1, 1, 2.0, norm_spec::sup_spec(), {true, true});
  CHECK_FALSE(report.applicable);
  CHECK(report.reason.find("not applicable") != std::string::npos);

  CHECK_THROWS_AS(check_energy_gain(m, 5, 1, 2.0, norm_spec::sup_spec(), {true, true}),
                  input_error);
  CHECK_THROWS_AS(check_energy_gain(m, 1, 0, 2.0, norm_spec::sup_spec(), {true, true}),
                  input_error);
  CHECK_THROWS_AS(check_energy_gain(m, 1, 1, 2.0, norm_spec::sup_spec(), {true}), input_error);
}
