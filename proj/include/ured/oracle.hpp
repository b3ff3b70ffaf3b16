#pragma once

#include <optional>
#include <vector>

#include "ured/rational.hpp"
#include "ured/set_family.hpp"

namespace ured {

/// Brute-force reference values for the intersection indices, computed by
/// enumerating every subfamily and intersecting its member sets directly.
/// Deliberately independent of the optimized point-degree implementation in
/// indices.hpp; used only by tests and the acceptance suite. Families are
/// limited to 20 sets (bitmask enumeration).
struct oracle_report {
  int l_value = 0;
  std::vector<int> gamma;  // gamma[k-1] for k = 1..m
  rational win_value;
  std::optional<rational> win_tilde_value;
};

oracle_report brute_force_indices(const set_family& family);

}  // namespace ured
