#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ured/martingale.hpp"
#include "ured/set_family.hpp"

namespace ured {

/// Three-level martingale over 2m equal atoms (one +/- pair per family
/// member) built from a start function g:
///   M_0 = g everywhere,
///   M_1 = g + inner(g) * (h_k/(m-1) - f_k)    on pair k,
///   M_2 = M_1 +/- f_k                          on the two halves of pair k,
/// where f_k is the k-th member's bump function, h = sum of all bumps, and
/// h_k = h - f_k. The increments of the last level are exactly the +/- bump
/// functions, every pair of the last level is a Walsh-Paley pair, and the
/// final sup norm never exceeds max(sup|g|, 1) + l/(m-1) with l the family's
/// intersection degree. All of this is re-checked exactly on the output;
/// a failure throws invariant_error.
struct lemma_result {
  martingale mart;
  int l_value = 0;
  rational bound;          // max(sup|g|, 1) + l/(m-1)
  rational max_final_sup;  // max over atoms of sup|M_2|, <= bound
};

lemma_result build_bump_martingale(const set_family& family, const function_vector& g,
                                   const std::vector<function_vector>* custom_bumps = nullptr);

/// Chains one bump martingale per family: on each atom of level 2k the next
/// family's construction runs on the conditional probability space. Start
/// function g must have sup norm exactly 1. Output has 2q levels over
/// prod(2 m_r) atoms and final sup norm at most 1 + sum_r l_r/(m_r - 1).
struct composition_result {
  martingale mart;
  std::vector<int> l_values;
  rational bound;
  rational max_final_sup;
  bool omega_even_full = false;       // every even level is a union of pairs
  bool increments_in_family = false;  // dM_{2r} is a signed bump of family r
  bool qualification = false;         // integral of sup|dM_{2r}|^2 is exactly 1
};

composition_result compose_bump_martingales(
    const std::vector<set_family>& families, const function_vector& g,
    const std::vector<std::vector<function_vector>>* custom_bumps = nullptr);

/// Certified upper bound 1 + sum_r l_r/(m_r - 1) for the martingale growth
/// index of any homogeneous set containing all the bump functions, witnessed
/// by the composed martingale. The witness is materialized (and fully
/// re-verified) only while the product of atom counts stays within
/// materialize_limit; the bound itself is exact arithmetic either way.
struct index_bound_report {
  rational bound;
  std::vector<int> l_values;
  std::vector<int> family_sizes;
  std::uint64_t witness_atoms = 0;
  bool witness_materialized = false;
  std::optional<composition_result> witness;
};

index_bound_report compute_index_bound(const std::vector<set_family>& families,
                                       const function_vector* g = nullptr,
                                       std::uint64_t materialize_limit = 250000);

}  // namespace ured
