#include "ured/generate.hpp"

#include <algorithm>
#include <set>

#include "ured/errors.hpp"

namespace ured {

set_family triangle_family() {
  set_family family;
  family.ground.size = 3;
  const int members[3][2] = {{0, 1}, {1, 2}, {0, 2}};
  for (const auto& pair : members) {
    point_set s(3);
    s.add(pair[0]);
    s.add(pair[1]);
    family.sets.push_back(std::move(s));
  }
  return family;
}

set_family disjoint_family(int m) {
  set_family family;
  family.ground.size = m;
  for (int k = 0; k < m; ++k) {
    point_set s(m);
    s.add(k);
    family.sets.push_back(std::move(s));
  }
  return family;
}

set_family common_point_family(int m, int n) {
  if (n < 1 + 0 || m < 1) throw input_error("bad common point family shape");
  set_family family;
  family.ground.size = n;
  for (int k = 0; k < m; ++k) {
    point_set s(n);
    s.add(0);
    if (n > 1) s.add(1 + k % (n - 1));  // vary the second point so sets differ
    family.sets.push_back(std::move(s));
  }
  if (n - 1 < m && n > 1) family.allow_duplicates = true;
  if (n == 1) family.allow_duplicates = m > 1;
  return family;
}

set_family random_family(rng& gen, int ground_lo, int ground_hi, int sets_lo, int sets_hi) {
  const int n = static_cast<int>(gen.next_int(ground_lo, ground_hi));
  const int distinct = n >= 20 ? 1 << 20 : (1 << n) - 1;
  const int m_cap = std::min(sets_hi, distinct);
  const int m = static_cast<int>(gen.next_int(std::min(sets_lo, m_cap), m_cap));

  set_family family;
  family.ground.size = n;
  std::set<std::vector<int>> used;
  while (static_cast<int>(family.sets.size()) < m) {
    point_set s(n);
    for (int p = 0; p < n; ++p)
      if (gen.next_bool()) s.add(p);
    if (s.empty()) s.add(static_cast<int>(gen.next_int(0, n - 1)));
    auto key = s.indices();
    if (used.insert(std::move(key)).second) family.sets.push_back(std::move(s));
  }
  return family;
}

function_vector random_function(rng& gen, int n, int max_abs, int max_den) {
  function_vector f(n);
  for (auto& v : f.values) {
    const auto den = gen.next_int(1, max_den);
    const auto num = gen.next_int(-max_abs * den, max_abs * den);
    v = rational(num) / rational(den);
  }
  return f;
}

measure random_positive_probability(rng& gen, int n, int max_weight) {
  std::vector<std::int64_t> raw(n);
  std::int64_t total = 0;
  for (auto& w : raw) {
    w = gen.next_int(1, max_weight);
    total += w;
  }
  measure mu;
  mu.ground.size = n;
  for (const auto w : raw) mu.weights.push_back(rational(w) / rational(total));
  return mu;
}

martingale random_martingale(rng& gen, int ground, int depth) {
  struct node {
    rational mass;
    int first_leaf = 0, leaf_count = 0;
  };
  std::vector<std::vector<node>> tree(depth + 1);
  std::vector<std::vector<int>> parent(depth + 1);  // per level, per node
  tree[0].push_back({rational(1), 0, 0});
  parent[0].push_back(-1);
  for (int lev = 0; lev < depth; ++lev) {
    for (std::size_t i = 0; i < tree[lev].size(); ++i) {
      const int children = static_cast<int>(gen.next_int(1, 3));
      std::vector<std::int64_t> w(children);
      std::int64_t total = 0;
      for (auto& x : w) {
        x = gen.next_int(1, 4);
        total += x;
      }
      // An even two-way split now and then, so Walsh-Paley pairs occur.
      if (children == 2 && gen.next_bool()) w = {1, 1}, total = 2;
      for (int c = 0; c < children; ++c) {
        tree[lev + 1].push_back(
            {tree[lev][i].mass * rational(w[c]) / rational(total), 0, 0});
        parent[lev + 1].push_back(static_cast<int>(i));
      }
    }
  }

  // Leaves of the last level become the atoms, in tree order.
  martingale m;
  const int atom_count = static_cast<int>(tree[depth].size());
  for (auto& nd : tree[depth]) m.filt.atom_mass.push_back(nd.mass);
  // leaf ranges bottom-up
  for (int a = 0; a < atom_count; ++a) {
    tree[depth][a].first_leaf = a;
    tree[depth][a].leaf_count = 1;
  }
  for (int lev = depth; lev > 0; --lev) {
    for (auto& nd : tree[lev - 1]) nd.leaf_count = 0;
    for (std::size_t i = 0; i < tree[lev].size(); ++i) {
      auto& up = tree[lev - 1][parent[lev][i]];
      if (up.leaf_count == 0) up.first_leaf = tree[lev][i].first_leaf;
      up.leaf_count += tree[lev][i].leaf_count;
    }
  }
  for (int lev = 0; lev <= depth; ++lev) {
    partition part;
    for (const auto& nd : tree[lev]) {
      block b;
      for (int a = 0; a < nd.leaf_count; ++a)
        b.atoms.push_back(static_cast<atom_index>(nd.first_leaf + a));
      part.blocks.push_back(std::move(b));
    }
    m.filt.levels.push_back(std::move(part));
  }

  // Values: start anywhere, then per parent draw all but one child increment
  // and solve the last one so the conditional mean vanishes exactly.
  m.levels.resize(depth + 1);
  m.levels[0] = {0, {random_function(gen, ground, 2, 3)}};
  for (int lev = 1; lev <= depth; ++lev) {
    m.levels[lev].level = lev;
    m.levels[lev].block_values.resize(tree[lev].size());
    std::size_t child = 0;
    for (std::size_t p = 0; p < tree[lev - 1].size(); ++p) {
      std::vector<std::size_t> kids;
      while (child < tree[lev].size() && parent[lev][child] == static_cast<int>(p))
        kids.push_back(child++);
      const auto& base = m.levels[lev - 1].block_values[p];
      function_vector weighted_sum(ground);
      for (std::size_t k = 0; k + 1 < kids.size(); ++k) {
        const auto inc = random_function(gen, ground, 1, 3);
        m.levels[lev].block_values[kids[k]] = base + inc;
        weighted_sum = weighted_sum + tree[lev][kids[k]].mass * inc;
      }
      const auto& last_mass = tree[lev][kids.back()].mass;
      const auto last_inc = (rational(-1) / last_mass) * weighted_sum;
      m.levels[lev].block_values[kids.back()] = base + last_inc;
    }
  }
  return m;
}

}  // namespace ured
