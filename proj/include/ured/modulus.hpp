#pragma once

#include <cstdint>
#include <string>

#include "ured/function_vector.hpp"
#include "ured/norms.hpp"

namespace ured {

struct search_budget {
  int starts = 512;       // random multi-starts per query
  int refine_iters = 40;  // pattern-search iterations, step halves each fail
};

struct modulus_query {
  norm_spec spec;
  real_vector direction;  // nonzero; normalized internally to unit norm
  double epsilon = 1.0;   // required separation |x - y| in the query norm, in (0, 2]
  search_budget budget;
  std::uint64_t seed = 0;
};

struct modulus_report {
  /// Attained value of 1 - |(x+y)/2| over the searched feasible pairs; an
  /// upper bound for the directional modulus since the witness attains it.
  double estimate = 0.0;
  real_vector witness_x;
  real_vector witness_y;
  double separation = 0.0;      // |x - y| = r for the normalized direction
  double feasibility = 0.0;     // max(| |x|-1 |, | |y|-1 |)
  bool degenerate = false;      // estimate < tol: a flat direction was found
  double tol = 1e-9;
};

/// Randomized multi-start minimization of 1 - |(x+y)/2| over unit vectors
/// x, y differing by r times the direction with separation r in [epsilon, 2].
/// Deterministic given the seed. The estimate is certified as an upper bound
/// by the returned witness pair.
modulus_report directional_modulus_estimate(const modulus_query& query);

/// (|x+y|^2 + |x-y|^2) / (2 |y|^2). Always >= 1 by convexity of the squared
/// norm; values below 1 - 1e-12 throw invariant_error.
double convexity_ratio(const norm_spec& spec, const real_vector& x, const real_vector& y);

struct membership_report {
  bool certified_out = false;  // witness y with ratio below the threshold found
  double best_ratio = 0.0;     // smallest ratio seen
  double threshold = 0.0;      // 1 + 1/i
  real_vector witness_y;       // minimizer found (the certificate when out)
};

/// Searches y with |y| <= t |x| minimizing the convexity ratio. Finding a
/// ratio below 1 + 1/i certifies that x lies outside the i-th stable set at
/// radius ratio t; otherwise the best ratio found is reported ("probably
/// in": the minimization is nonconvex, so no claim of membership is made).
membership_report probe_membership(const norm_spec& spec, const real_vector& x, int i, double t,
                                   const search_budget& budget, std::uint64_t seed);

}  // namespace ured
