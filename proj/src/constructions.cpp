#include "ured/constructions.hpp"

#include <algorithm>

#include "ured/errors.hpp"
#include "ured/indices.hpp"

namespace ured {

namespace {

std::vector<function_vector> resolve_bumps(const set_family& family,
                                           const std::vector<function_vector>* custom) {
  std::vector<function_vector> bumps;
  if (custom) {
    if (static_cast<int>(custom->size()) != family.size())
      throw input_error("custom bump count does not match family size");
    for (int k = 0; k < family.size(); ++k) {
      validate_bump_range((*custom)[k], family.sets[k]);
      bumps.push_back((*custom)[k]);
    }
  } else {
    for (const auto& s : family.sets) bumps.push_back(indicator_bump(s));
  }
  return bumps;
}

/// Lemma-level block values for one start function.
struct stage_values {
  std::vector<function_vector> mid;    // per pair k: g + inner(g)*(h_k/(m-1) - f_k)
  std::vector<function_vector> final;  // per atom 2k, 2k+1: mid[k] +/- f_k
};

stage_values stage_from(const function_vector& g, const std::vector<function_vector>& bumps) {
  const int m = static_cast<int>(bumps.size());
  function_vector h(g.size());
  for (const auto& f : bumps) h = h + f;
  const auto parts = truncate_decompose(g);
  const rational inv = rational(1) / rational(m - 1);

  stage_values out;
  out.mid.reserve(m);
  out.final.reserve(2 * m);
  for (int k = 0; k < m; ++k) {
    const function_vector h_k = h - bumps[k];
    const function_vector drift = hadamard(parts.inner, inv * h_k - bumps[k]);
    out.mid.push_back(g + drift);
    out.final.push_back(out.mid.back() + bumps[k]);
    out.final.push_back(out.mid.back() - bumps[k]);
  }
  return out;
}

}  // namespace

lemma_result build_bump_martingale(const set_family& family, const function_vector& g,
                                   const std::vector<function_vector>* custom_bumps) {
  family.validate();
  const int m = family.size();
  if (m < 2) throw input_error("bump martingale needs at least 2 sets (the bound divides by m-1)");
  if (g.size() != family.ground.size)
    throw input_error("start function has wrong ground size");
  const auto bumps = resolve_bumps(family, custom_bumps);

  lemma_result result;
  result.l_value = max_degree(family).value;

  // sup|h_k| <= l for every k: each point lies in at most l members.
  for (int k = 0; k < m; ++k) {
    function_vector h_k(g.size());
    for (int j = 0; j < m; ++j)
      if (j != k) h_k = h_k + bumps[j];
    if (sup_norm(h_k) > result.l_value)
      throw invariant_error("partial bump sum exceeds the intersection degree");
  }

  martingale mart;
  mart.filt.atom_mass.assign(2 * m, rational(1) / rational(2 * m));
  partition trivial;
  block all;
  for (int a = 0; a < 2 * m; ++a) all.atoms.push_back(static_cast<atom_index>(a));
  trivial.blocks.push_back(all);
  partition pairs;
  for (int k = 0; k < m; ++k) {
    block b;
    b.atoms = {static_cast<atom_index>(2 * k), static_cast<atom_index>(2 * k + 1)};
    pairs.blocks.push_back(std::move(b));
  }
  partition atoms;
  for (int a = 0; a < 2 * m; ++a) {
    block b;
    b.atoms = {static_cast<atom_index>(a)};
    atoms.blocks.push_back(std::move(b));
  }
  mart.filt.levels = {std::move(trivial), std::move(pairs), std::move(atoms)};

  const auto stage = stage_from(g, bumps);
  mart.levels.resize(3);
  mart.levels[0] = {0, {g}};
  mart.levels[1] = {1, stage.mid};
  mart.levels[2] = {2, stage.final};

  // Postconditions, all exact.
  const auto report = validate_martingale(mart);
  if (!report.valid)
    throw invariant_error("constructed martingale failed validation: " +
                          report.violations.front());
  const auto wp = find_walsh_paley_pairs(mart.filt);
  if (!wp.levels[1].omega_is_full)
    throw invariant_error("final level is not covered by Walsh-Paley pairs");

  const rational sup_g = sup_norm(g);
  result.bound = std::max(sup_g, rational(1)) + rational(result.l_value) / rational(m - 1);
  result.max_final_sup = 0;
  for (int a = 0; a < 2 * m; ++a) {
    const int k = a / 2;
    const auto d = stage.final[a] - stage.mid[k];
    if (!(d == bumps[k]) && !(d == -bumps[k]))
      throw invariant_error("final increment is not a signed bump function");
    const rational s = sup_norm(stage.final[a]);
    if (s > result.bound) throw invariant_error("final sup norm exceeds the certified bound");
    result.max_final_sup = std::max(result.max_final_sup, s);
  }
  result.mart = std::move(mart);
  return result;
}

composition_result compose_bump_martingales(
    const std::vector<set_family>& families, const function_vector& g,
    const std::vector<std::vector<function_vector>>* custom_bumps) {
  if (families.empty()) throw input_error("composition needs at least one family");
  const int q = static_cast<int>(families.size());
  const int ground = families.front().ground.size;
  std::vector<std::vector<function_vector>> bumps(q);
  for (int r = 0; r < q; ++r) {
    families[r].validate();
    if (families[r].ground.size != ground)
      throw input_error("all families must share one ground space");
    if (families[r].size() < 2) throw input_error("every family needs at least 2 sets");
    bumps[r] = resolve_bumps(families[r], custom_bumps ? &(*custom_bumps)[r] : nullptr);
  }
  if (custom_bumps && custom_bumps->size() != static_cast<std::size_t>(q))
    throw input_error("custom bump family count does not match");
  if (g.size() != ground) throw input_error("start function has wrong ground size");
  if (sup_norm(g) != 1) throw input_error("start function must have sup norm exactly 1");

  std::uint64_t atom_count = 1;
  for (int r = 0; r < q; ++r) atom_count *= 2 * static_cast<std::uint64_t>(families[r].size());

  martingale mart;
  mart.filt.atom_mass.assign(atom_count, rational(1) / rational(bigint(atom_count)));

  // Blocks of every level are contiguous atom ranges.
  const auto make_level = [&](std::uint64_t block_count) {
    partition part;
    const std::uint64_t span = atom_count / block_count;
    part.blocks.resize(block_count);
    for (std::uint64_t b = 0; b < block_count; ++b) {
      auto& blk = part.blocks[b];
      blk.atoms.reserve(span);
      for (std::uint64_t a = 0; a < span; ++a)
        blk.atoms.push_back(static_cast<atom_index>(b * span + a));
    }
    return part;
  };

  mart.filt.levels.push_back(make_level(1));
  mart.levels.push_back({0, {g}});
  std::uint64_t blocks = 1;
  for (int r = 0; r < q; ++r) {
    const int m = families[r].size();
    mart.filt.levels.push_back(make_level(blocks * m));
    mart.filt.levels.push_back(make_level(blocks * 2 * m));

    const auto& prev = mart.levels.back().block_values;
    std::vector<function_vector> mid(blocks * m);
    std::vector<function_vector> fin(blocks * 2 * m);
    for (std::uint64_t b = 0; b < blocks; ++b) {
      const auto stage = stage_from(prev[b], bumps[r]);
      for (int k = 0; k < m; ++k) {
        mid[b * m + k] = stage.mid[k];
        fin[b * 2 * m + 2 * k] = stage.final[2 * k];
        fin[b * 2 * m + 2 * k + 1] = stage.final[2 * k + 1];
      }
    }
    mart.levels.push_back({2 * r + 1, std::move(mid)});
    mart.levels.push_back({2 * r + 2, std::move(fin)});
    blocks *= 2 * static_cast<std::uint64_t>(m);
  }

  composition_result result;
  result.l_values.reserve(q);
  result.bound = 1;
  for (int r = 0; r < q; ++r) {
    result.l_values.push_back(max_degree(families[r]).value);
    result.bound += rational(result.l_values.back()) / rational(families[r].size() - 1);
  }

  const auto report = validate_martingale(mart);
  if (!report.valid)
    throw invariant_error("composed martingale failed validation: " + report.violations.front());

  const auto wp = find_walsh_paley_pairs(mart.filt);
  result.omega_even_full = true;
  for (int r = 1; r <= q; ++r)
    result.omega_even_full = result.omega_even_full && wp.levels[2 * r - 1].omega_is_full;
  if (!result.omega_even_full)
    throw invariant_error("an even level is not covered by Walsh-Paley pairs");

  result.increments_in_family = true;
  result.qualification = true;
  for (int r = 1; r <= q; ++r) {
    const auto increments = increments_at_level(mart, 2 * r);
    rational integral = 0;
    for (std::size_t bi = 0; bi < increments.size(); ++bi) {
      bool matches = false;
      for (const auto& f : bumps[r - 1])
        if (increments[bi] == f || increments[bi] == -f) {
          matches = true;
          break;
        }
      if (!matches) result.increments_in_family = false;
      const rational s = sup_norm(increments[bi]);
      integral += mart.filt.block_mass(mart.filt.levels[2 * r].blocks[bi]) * s * s;
    }
    if (integral != 1) result.qualification = false;
  }
  if (!result.increments_in_family)
    throw invariant_error("an even-level increment is not a signed bump function");
  if (!result.qualification)
    throw invariant_error("even-level increment energy is not exactly 1");

  // Certified final bound, checked at every atom; intermediate even levels
  // obey their partial bounds as well.
  result.max_final_sup = 0;
  rational partial = 1;
  for (int r = 1; r <= q; ++r) {
    partial += rational(result.l_values[r - 1]) / rational(families[r - 1].size() - 1);
    for (const auto& value : mart.levels[2 * r].block_values) {
      const rational s = sup_norm(value);
      if (s > partial) throw invariant_error("sup norm exceeds the partial bound at an even level");
      if (r == q) result.max_final_sup = std::max(result.max_final_sup, s);
    }
  }
  result.mart = std::move(mart);
  return result;
}

index_bound_report compute_index_bound(const std::vector<set_family>& families,
                                       const function_vector* g,
                                       std::uint64_t materialize_limit) {
  if (families.empty()) throw input_error("bound needs at least one family");
  index_bound_report report;
  report.bound = 1;
  std::uint64_t atoms = 1;
  bool overflow = false;
  for (const auto& family : families) {
    family.validate();
    if (family.size() < 2) throw input_error("every family needs at least 2 sets");
    const int l = max_degree(family).value;
    report.l_values.push_back(l);
    report.family_sizes.push_back(family.size());
    report.bound += rational(l) / rational(family.size() - 1);
    if (atoms > (std::uint64_t{1} << 62) / (2 * family.size()))
      overflow = true;
    else
      atoms *= 2 * static_cast<std::uint64_t>(family.size());
  }
  report.witness_atoms = overflow ? 0 : atoms;

  if (!overflow && atoms <= materialize_limit) {
    function_vector start;
    if (g) {
      start = *g;
    } else {
      start = function_vector(families.front().ground.size);
      for (auto& v : start.values) v = 1;
    }
    report.witness = compose_bump_martingales(families, start);
    report.witness_materialized = true;
    if (report.witness->bound != report.bound)
      throw invariant_error("witness bound disagrees with the arithmetic bound");
  }
  return report;
}

}  // namespace ured
