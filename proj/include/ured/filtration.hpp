#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ured/rational.hpp"

namespace ured {

using atom_index = std::uint32_t;

/// Block of a partition: a sorted set of atom indices.
struct block {
  std::vector<atom_index> atoms;

  bool operator==(const block&) const = default;
};

struct partition {
  std::vector<block> blocks;  // sorted by first atom

  [[nodiscard]] int size() const { return static_cast<int>(blocks.size()); }
};

/// Finite filtration: atoms with positive rational masses summing to 1 and a
/// chain of partitions, each refining the previous. Level 0 is the trivial
/// partition.
struct filtration {
  std::vector<rational> atom_mass;
  std::vector<partition> levels;

  [[nodiscard]] int atom_count() const { return static_cast<int>(atom_mass.size()); }
  [[nodiscard]] int depth() const { return static_cast<int>(levels.size()) - 1; }

  [[nodiscard]] rational block_mass(const block& b) const;

  /// blocks-of-level map: result[a] = index of the level's block containing
  /// atom a.
  [[nodiscard]] std::vector<int> atom_to_block(int level) const;

  /// Sorts atoms within blocks and blocks by first atom.
  void canonicalize();

  /// All structural invariants; violations are collected, not thrown.
  [[nodiscard]] std::vector<std::string> structural_violations() const;

  void validate() const;  // throws input_error listing the first violation
};

/// Dyadic filtration of the given depth: 2^depth equal atoms, level k splits
/// into 2^k equal blocks.
filtration dyadic_filtration(int depth);

/// Pair of equal-mass level-k blocks whose union is a level-(k-1) block.
/// The union condition forces the parent to have exactly these two children,
/// so the pair always exhausts its parent.
struct paley_pair {
  int plus_block = 0;   // lexicographically first of the two
  int minus_block = 0;
  int parent_block = 0;
};

struct walsh_paley_level {
  std::vector<paley_pair> pairs;
  std::vector<atom_index> omega_atoms;  // union of all paired blocks, sorted
  rational omega_mass;
  bool omega_is_full = false;
};

struct walsh_paley_structure {
  std::vector<walsh_paley_level> levels;  // entry k-1 describes level k
};

walsh_paley_structure find_walsh_paley_pairs(const filtration& filt);

}  // namespace ured
