#include "ured/measure.hpp"

#include "ured/errors.hpp"

namespace ured {

rational measure::total() const {
  rational sum = 0;
  for (const auto& w : weights) sum += w;
  return sum;
}

bool measure::strictly_positive() const {
  for (const auto& w : weights)
    if (w <= 0) return false;
  return !weights.empty();
}

rational measure::mass_of(const point_set& s) const {
  rational sum = 0;
  for (const int p : s.indices()) sum += weights[p];
  return sum;
}

void measure::validate() const {
  ground.validate();
  if (static_cast<int>(weights.size()) != ground.size)
    throw input_error("measure weight count does not match ground size");
  for (const auto& w : weights)
    if (w < 0) throw input_error("negative measure weight");
}

measure uniform_measure(int ground_size) {
  measure mu;
  mu.ground.size = ground_size;
  mu.weights.assign(ground_size, rational(1) / rational(ground_size));
  return mu;
}

measure dirac_measure(int ground_size, int point) {
  measure mu;
  mu.ground.size = ground_size;
  mu.weights.assign(ground_size, rational(0));
  mu.weights.at(point) = 1;
  return mu;
}

}  // namespace ured
