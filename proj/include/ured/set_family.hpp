#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ured {

/// Finite ground space: points 0..size-1, with optional display labels.
struct ground_space {
  int size = 0;
  std::vector<std::string> labels;  // empty, or exactly `size` entries

  void validate() const;  // throws input_error
};

/// Subset of a ground space, stored as a bit mask. One inline word covers
/// ground sizes up to 64; larger grounds spill to further words.
class point_set {
 public:
  point_set() = default;
  explicit point_set(int universe);
  static point_set from_indices(int universe, std::span<const int> indices);

  void add(int point);
  [[nodiscard]] bool contains(int point) const;
  [[nodiscard]] int universe() const { return universe_; }
  [[nodiscard]] int count() const;
  [[nodiscard]] bool empty() const;

  [[nodiscard]] bool intersects(const point_set& other) const;
  [[nodiscard]] point_set intersection(const point_set& other) const;

  /// Sorted member indices.
  [[nodiscard]] std::vector<int> indices() const;

  bool operator==(const point_set& other) const = default;

  [[nodiscard]] std::span<const std::uint64_t> words() const {
    return {words_.data(), words_.size()};
  }

 private:
  int universe_ = 0;
  boost::container::small_vector<std::uint64_t, 1> words_;
};

/// Ordered family of nonempty subsets of a common ground space.
struct set_family {
  ground_space ground;
  std::vector<point_set> sets;
  bool allow_duplicates = false;

  [[nodiscard]] int size() const { return static_cast<int>(sets.size()); }

  /// Checks the type invariants: nonempty family, nonempty member sets,
  /// matching universes, and (unless allow_duplicates) pairwise distinct
  /// sets. Throws input_error with the violated condition.
  void validate() const;
};

}  // namespace ured
