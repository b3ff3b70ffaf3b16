#include "ured/set_family.hpp"

#include <bit>

#include "ured/errors.hpp"

namespace ured {

void ground_space::validate() const {
  if (size < 1) throw input_error("ground space must have at least one point");
  if (!labels.empty() && static_cast<int>(labels.size()) != size)
    throw input_error("labels length does not match ground size");
}

point_set::point_set(int universe) : universe_(universe) {
  if (universe < 0) throw input_error("negative universe size");
  words_.resize((static_cast<std::size_t>(universe) + 63) / 64, 0);
}

point_set point_set::from_indices(int universe, std::span<const int> indices) {
  point_set result(universe);
  for (const int i : indices) result.add(i);
  return result;
}

void point_set::add(int point) {
  if (point < 0 || point >= universe_)
    throw input_error("point index " + std::to_string(point) + " outside ground space of size " +
                      std::to_string(universe_));
  words_[static_cast<std::size_t>(point) / 64] |= std::uint64_t{1} << (point % 64);
}

bool point_set::contains(int point) const {
  if (point < 0 || point >= universe_) return false;
  return (words_[static_cast<std::size_t>(point) / 64] >> (point % 64)) & 1u;
}

int point_set::count() const {
  int total = 0;
  for (const auto word : words_) total += std::popcount(word);
  return total;
}

bool point_set::empty() const {
  for (const auto word : words_)
    if (word != 0) return false;
  return true;
}

bool point_set::intersects(const point_set& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

point_set point_set::intersection(const point_set& other) const {
  point_set result(std::min(universe_, other.universe_));
  for (std::size_t i = 0; i < result.words_.size(); ++i)
    result.words_[i] = words_[i] & other.words_[i];
  return result;
}

std::vector<int> point_set::indices() const {
  std::vector<int> out;
  for (int i = 0; i < universe_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

void set_family::validate() const {
  ground.validate();
  if (sets.empty()) throw input_error("empty family");
  for (const auto& s : sets) {
    if (s.universe() != ground.size) throw input_error("set universe does not match ground space");
    if (s.empty()) throw input_error("empty set in family");
  }
  if (!allow_duplicates) {
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = i + 1; j < sets.size(); ++j)
        if (sets[i] == sets[j])
          throw input_error("duplicate sets at positions " + std::to_string(i) + " and " +
                            std::to_string(j) + " (allow_duplicates is false)");
  }
}

}  // namespace ured
