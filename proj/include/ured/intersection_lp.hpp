#pragma once

#include <vector>

#include "ured/measure.hpp"
#include "ured/rational.hpp"
#include "ured/set_family.hpp"

namespace ured {

/// Optimal value and both optimizers of
///   max over probability measures mu of min over family members B of mu(B).
/// The dual weighting lambda (one weight per set, >= 0, summing to 1)
/// certifies optimality: max over points of the lambda-weighted count of
/// sets containing that point equals the primal value exactly.
struct lp_certificate {
  enum class state { optimal, infeasible };
  state status = state::infeasible;
  rational value;
  measure primal;
  std::vector<rational> dual;
};

lp_certificate max_min_measure(const set_family& family);

/// Brute-force infimum over all sequences of family members with repetition
/// (encoded as multiplicity vectors) of length <= max_len of
///   (largest number of entries sharing a common point) / length.
struct repetition_result {
  rational value;
  int length = 0;                  // length of the first optimal sequence
  std::vector<int> multiplicity;   // how often each set occurs in it
};
repetition_result kelley_number_rep(const set_family& family, int max_len);

/// Cross-checks the exact LP against the sequence search: primal and dual
/// optima must coincide (strong duality) and every sequence value is an
/// upper bound for the LP value.
struct duality_report {
  rational lp_value;
  rational dual_cover_value;  // max point coverage under the dual weights
  rational rep_value;
  int rep_length = 0;
  rational gap;  // rep_value - lp_value, always >= 0
  bool primal_dual_equal = false;
};
duality_report verify_duality(const set_family& family, int max_len);

}  // namespace ured
