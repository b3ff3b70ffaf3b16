#include "ured/filtration.hpp"

#include <algorithm>
#include <map>

#include "ured/errors.hpp"

namespace ured {

rational filtration::block_mass(const block& b) const {
  rational sum = 0;
  for (const auto a : b.atoms) sum += atom_mass[a];
  return sum;
}

std::vector<int> filtration::atom_to_block(int level) const {
  std::vector<int> map(atom_count(), -1);
  const auto& part = levels[level];
  for (int bi = 0; bi < part.size(); ++bi)
    for (const auto a : part.blocks[bi].atoms) map[a] = bi;
  return map;
}

void filtration::canonicalize() {
  for (auto& level : levels) {
    for (auto& b : level.blocks) std::sort(b.atoms.begin(), b.atoms.end());
    std::sort(level.blocks.begin(), level.blocks.end(), [](const block& x, const block& y) {
      return !x.atoms.empty() && !y.atoms.empty() && x.atoms.front() < y.atoms.front();
    });
  }
}

std::vector<std::string> filtration::structural_violations() const {
  std::vector<std::string> out;
  const int n = atom_count();
  if (n == 0) {
    out.push_back("no atoms");
    return out;
  }
  rational total = 0;
  for (int a = 0; a < n; ++a) {
    if (atom_mass[a] <= 0) out.push_back("atom " + std::to_string(a) + " has nonpositive mass");
    total += atom_mass[a];
  }
  if (total != 1) out.push_back("atom masses sum to " + rational_to_string(total) + ", not 1");
  if (levels.empty()) {
    out.push_back("no levels");
    return out;
  }
  if (levels[0].size() != 1 || static_cast<int>(levels[0].blocks[0].atoms.size()) != n)
    out.push_back("level 0 is not the trivial partition");

  for (std::size_t lev = 0; lev < levels.size(); ++lev) {
    std::vector<char> seen(n, 0);
    for (const auto& b : levels[lev].blocks) {
      if (b.atoms.empty()) out.push_back("empty block at level " + std::to_string(lev));
      for (const auto a : b.atoms) {
        if (a >= static_cast<atom_index>(n)) {
          out.push_back("atom index out of range at level " + std::to_string(lev));
          continue;
        }
        if (seen[a])
          out.push_back("atom " + std::to_string(a) + " covered twice at level " +
                        std::to_string(lev));
        seen[a] = 1;
      }
    }
    for (int a = 0; a < n; ++a)
      if (!seen[a])
        out.push_back("atom " + std::to_string(a) + " missing at level " + std::to_string(lev));
  }
  for (std::size_t lev = 0; lev + 1 < levels.size(); ++lev) {
    const auto parent_of = atom_to_block(static_cast<int>(lev));
    for (const auto& child : levels[lev + 1].blocks) {
      if (child.atoms.empty()) continue;
      const int parent = parent_of[child.atoms.front()];
      for (const auto a : child.atoms) {
        if (parent_of[a] != parent) {
          out.push_back("refinement violation: block at level " + std::to_string(lev + 1) +
                        " straddles two blocks of level " + std::to_string(lev));
          break;
        }
      }
    }
  }
  return out;
}

void filtration::validate() const {
  const auto violations = structural_violations();
  if (!violations.empty()) throw input_error("invalid filtration: " + violations.front());
}

filtration dyadic_filtration(int depth) {
  if (depth < 0) throw input_error("negative filtration depth");
  filtration filt;
  const int n = 1 << depth;
  filt.atom_mass.assign(n, rational(1) / rational(n));
  for (int lev = 0; lev <= depth; ++lev) {
    partition part;
    const int blocks = 1 << lev;
    const int span = n / blocks;
    for (int b = 0; b < blocks; ++b) {
      block blk;
      for (int a = 0; a < span; ++a) blk.atoms.push_back(static_cast<atom_index>(b * span + a));
      part.blocks.push_back(std::move(blk));
    }
    filt.levels.push_back(std::move(part));
  }
  return filt;
}

walsh_paley_structure find_walsh_paley_pairs(const filtration& filt) {
  walsh_paley_structure result;
  const rational full = 1;
  for (int lev = 1; lev <= filt.depth(); ++lev) {
    walsh_paley_level wp;
    const auto parent_of = filt.atom_to_block(lev - 1);
    std::map<int, std::vector<int>> children;  // parent block -> child block indices
    for (int bi = 0; bi < filt.levels[lev].size(); ++bi)
      children[parent_of[filt.levels[lev].blocks[bi].atoms.front()]].push_back(bi);
    for (const auto& [parent, kids] : children) {
      if (kids.size() != 2) continue;  // the union of two children must be the whole parent
      const auto& a = filt.levels[lev].blocks[kids[0]];
      const auto& b = filt.levels[lev].blocks[kids[1]];
      if (filt.block_mass(a) != filt.block_mass(b)) continue;
      wp.pairs.push_back({kids[0], kids[1], parent});
      wp.omega_atoms.insert(wp.omega_atoms.end(), a.atoms.begin(), a.atoms.end());
      wp.omega_atoms.insert(wp.omega_atoms.end(), b.atoms.begin(), b.atoms.end());
    }
    std::sort(wp.omega_atoms.begin(), wp.omega_atoms.end());
    wp.omega_mass = 0;
    for (const auto a : wp.omega_atoms) wp.omega_mass += filt.atom_mass[a];
    wp.omega_is_full = wp.omega_mass == full &&
                       static_cast<int>(wp.omega_atoms.size()) == filt.atom_count();
    result.levels.push_back(std::move(wp));
  }
  return result;
}

}  // namespace ured
