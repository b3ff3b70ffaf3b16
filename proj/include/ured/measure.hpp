#pragma once

#include <vector>

#include "ured/rational.hpp"
#include "ured/set_family.hpp"

namespace ured {

/// Nonnegative weight per ground point, exact rationals.
struct measure {
  ground_space ground;
  std::vector<rational> weights;

  [[nodiscard]] int size() const { return static_cast<int>(weights.size()); }
  [[nodiscard]] rational total() const;
  [[nodiscard]] bool is_probability() const { return total() == 1; }
  [[nodiscard]] bool strictly_positive() const;
  [[nodiscard]] rational mass_of(const point_set& s) const;

  /// Nonnegative weights, one per point. Throws input_error otherwise.
  void validate() const;
};

measure uniform_measure(int ground_size);

/// Dirac mass at one point.
measure dirac_measure(int ground_size, int point);

}  // namespace ured
