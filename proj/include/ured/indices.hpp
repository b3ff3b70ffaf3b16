#pragma once

#include <optional>
#include <vector>

#include "ured/rational.hpp"
#include "ured/set_family.hpp"

namespace ured {

/// Largest number of family members sharing a common point. Equivalently:
/// the size bound l such that every subfamily larger than l has empty
/// intersection (a subfamily intersects exactly when some point lies in all
/// of its members).
struct degree_result {
  int value = 0;
  int witness_point = -1;  // smallest point of maximum degree
};
degree_result max_degree(const set_family& family);

/// Minimum of max_degree over all subfamilies of exactly k members, by
/// subset enumeration with branch-and-bound (a partial selection whose
/// degree already reaches the incumbent cannot improve). Witness is the
/// lexicographically smallest optimal subfamily.
int min_subfamily_degree(const set_family& family, int k, std::vector<int>* witness = nullptr);

struct ratio_result {
  rational value;
  std::vector<int> witness;  // indices of the subfamily attaining the value
};

/// min over 1 <= k <= |family| of min_subfamily_degree(k) / k.
ratio_result weak_intersection_number(const set_family& family);

/// min over 2 <= k <= |family| of min_subfamily_degree(k) / (k - 1).
ratio_result weak_intersection_number_tilde(const set_family& family);

/// Everything at once; gamma[k-1] = min_subfamily_degree(k).
struct index_report {
  int l_value = 0;
  int l_witness_point = -1;
  std::vector<int> gamma;
  rational win_value;
  std::vector<int> win_witness;
  std::optional<rational> win_tilde_value;  // absent for single-set families
  std::vector<int> win_tilde_witness;
};
index_report compute_indices(const set_family& family);

}  // namespace ured
