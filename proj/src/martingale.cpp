#include "ured/martingale.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ured/errors.hpp"

namespace ured {

namespace {

/// parent_of_block[ci] = index of the level-(n-1) block containing child ci.
std::vector<int> parent_blocks(const filtration& filt, int n) {
  const auto parent_of_atom = filt.atom_to_block(n - 1);
  const auto& children = filt.levels[n];
  std::vector<int> map(children.size());
  for (int ci = 0; ci < children.size(); ++ci)
    map[ci] = parent_of_atom[children.blocks[ci].atoms.front()];
  return map;
}

}  // namespace

std::vector<function_vector> increments_at_level(const martingale& m, int n) {
  if (n == 0) return m.levels[0].block_values;
  const auto parents = parent_blocks(m.filt, n);
  std::vector<function_vector> out(m.filt.levels[n].size());
  for (int ci = 0; ci < m.filt.levels[n].size(); ++ci)
    out[ci] = m.levels[n].block_values[ci] - m.levels[n - 1].block_values[parents[ci]];
  return out;
}

function_vector martingale::increment(int n, int block_index) const {
  const auto& curr = levels[n].block_values[block_index];
  if (n == 0) return curr;
  const auto parent_of = filt.atom_to_block(n - 1);
  const auto first_atom = filt.levels[n].blocks[block_index].atoms.front();
  return curr - levels[n - 1].block_values[parent_of[first_atom]];
}

const function_vector& martingale::value_at(int n, atom_index atom) const {
  const auto map = filt.atom_to_block(n);
  return levels[n].block_values[map[atom]];
}

validation_report validate_martingale(const martingale& m) {
  validation_report report;
  report.violations = m.filt.structural_violations();
  if (static_cast<int>(m.levels.size()) != static_cast<int>(m.filt.levels.size()))
    report.violations.push_back("martingale has " + std::to_string(m.levels.size()) +
                                " levels but the filtration has " +
                                std::to_string(m.filt.levels.size()));
  if (!report.violations.empty()) return report;

  for (int n = 0; n <= m.top_level(); ++n) {
    if (m.levels[n].level != n)
      report.violations.push_back("level field mismatch at level " + std::to_string(n));
    if (static_cast<int>(m.levels[n].block_values.size()) != m.filt.levels[n].size())
      report.violations.push_back("value count mismatch at level " + std::to_string(n));
  }
  if (!report.violations.empty()) return report;

  // Zero conditional increments: on every block E of level n-1, the
  // mass-weighted sum of M_n over E's children equals mass(E) * M_{n-1}(E).
  for (int n = 1; n <= m.top_level(); ++n) {
    const auto parents = parent_blocks(m.filt, n);
    const auto& children = m.filt.levels[n];
    const int parent_count = m.filt.levels[n - 1].size();
    std::vector<function_vector> sums(parent_count);
    std::vector<char> started(parent_count, 0);
    for (int ci = 0; ci < children.size(); ++ci) {
      const int parent = parents[ci];
      const auto weighted = m.filt.block_mass(children.blocks[ci]) * m.levels[n].block_values[ci];
      if (!started[parent]) {
        sums[parent] = weighted;
        started[parent] = 1;
      } else {
        sums[parent] = sums[parent] + weighted;
      }
    }
    for (int pi = 0; pi < parent_count; ++pi) {
      const auto expected =
          m.filt.block_mass(m.filt.levels[n - 1].blocks[pi]) * m.levels[n - 1].block_values[pi];
      if (!(sums[pi] == expected))
        report.violations.push_back("conditional mean of increment nonzero at level " +
                                    std::to_string(n) + ", block " + std::to_string(pi));
    }
  }

  // Antisymmetry across Walsh-Paley pairs.
  const auto wp = find_walsh_paley_pairs(m.filt);
  for (int lev = 1; lev <= m.filt.depth(); ++lev) {
    if (wp.levels[lev - 1].pairs.empty()) continue;
    const auto increments = increments_at_level(m, lev);
    for (const auto& pair : wp.levels[lev - 1].pairs) {
      if (!(increments[pair.plus_block] == -increments[pair.minus_block]))
        report.violations.push_back("pair increments not antisymmetric at level " +
                                    std::to_string(lev));
      ++report.paley_pairs_checked;
    }
  }

  report.valid = report.violations.empty();
  return report;
}

double expected_norm_squared(const martingale& m, int n, const norm_spec& spec) {
  double sum = 0;
  for (int bi = 0; bi < m.filt.levels[n].size(); ++bi) {
    const double v = norm(spec, m.levels[n].block_values[bi]);
    sum += rational_to_double(m.filt.block_mass(m.filt.levels[n].blocks[bi])) * v * v;
  }
  return sum;
}

rational expected_norm_squared_exact(const martingale& m, int n, const norm_spec& spec) {
  rational sum = 0;
  for (int bi = 0; bi < m.filt.levels[n].size(); ++bi)
    sum += m.filt.block_mass(m.filt.levels[n].blocks[bi]) *
           norm_squared_exact(spec, m.levels[n].block_values[bi]);
  return sum;
}

monotonicity_report check_norm_square_monotone(const martingale& m, const norm_spec& spec,
                                               bool exact) {
  const auto valid = validate_martingale(m);
  if (!valid.valid)
    throw input_error("monotonicity check requires a valid martingale: " +
                      valid.violations.front());

  monotonicity_report report;
  report.exact = exact;
  report.holds = true;
  report.min_slack = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= m.top_level(); ++n) {
    const auto parents = parent_blocks(m.filt, n);
    const auto& children = m.filt.levels[n];
    const int parent_count = m.filt.levels[n - 1].size();
    if (exact) {
      std::vector<rational> lhs(parent_count, rational(0));
      for (int ci = 0; ci < children.size(); ++ci)
        lhs[parents[ci]] += m.filt.block_mass(children.blocks[ci]) *
                            norm_squared_exact(spec, m.levels[n].block_values[ci]);
      for (int pi = 0; pi < parent_count; ++pi) {
        const rational rhs = m.filt.block_mass(m.filt.levels[n - 1].blocks[pi]) *
                             norm_squared_exact(spec, m.levels[n - 1].block_values[pi]);
        const rational slack = lhs[pi] - rhs;
        const double slack_d = rational_to_double(slack);
        if (slack_d < report.min_slack) {
          report.min_slack = slack_d;
          report.worst_level = n;
          report.worst_block = pi;
        }
        if (slack < 0) report.holds = false;
      }
    } else {
      std::vector<double> lhs(parent_count, 0.0);
      for (int ci = 0; ci < children.size(); ++ci) {
        const double v = norm(spec, m.levels[n].block_values[ci]);
        lhs[parents[ci]] += rational_to_double(m.filt.block_mass(children.blocks[ci])) * v * v;
      }
      for (int pi = 0; pi < parent_count; ++pi) {
        const double v = norm(spec, m.levels[n - 1].block_values[pi]);
        const double rhs =
            rational_to_double(m.filt.block_mass(m.filt.levels[n - 1].blocks[pi])) * v * v;
        const double scale = std::max({1.0, std::fabs(lhs[pi]), std::fabs(rhs)});
        const double slack = (lhs[pi] - rhs) / scale;
        if (slack < report.min_slack) {
          report.min_slack = slack;
          report.worst_level = n;
          report.worst_block = pi;
        }
        if (slack < -1e-12) report.holds = false;
      }
    }
  }
  if (m.top_level() == 0) report.min_slack = 0;
  return report;
}

energy_gain_report check_energy_gain(const martingale& m, int n, int i, double t,
                                     const norm_spec& spec,
                                     const std::vector<bool>& atom_flags) {
  if (n < 1 || n > m.top_level()) throw input_error("level out of range for energy gain check");
  if (i < 1 || !(t > 0)) throw input_error("energy gain check needs i >= 1 and t > 0");
  if (static_cast<int>(atom_flags.size()) != m.filt.atom_count())
    throw input_error("flag count does not match atom count");

  energy_gain_report report;
  double sup_energy = 0;
  for (int lev = 0; lev <= m.top_level(); ++lev)
    sup_energy = std::max(sup_energy, expected_norm_squared(m, lev, spec));
  if (sup_energy > 1 + 1e-12) {
    report.reason = "not applicable: sup_n E|M_n|^2 = " + std::to_string(sup_energy) + " > 1";
    return report;
  }

  const auto wp = find_walsh_paley_pairs(m.filt);
  std::vector<char> in_omega(m.filt.atom_count(), 0);
  for (const auto a : wp.levels[n - 1].omega_atoms) in_omega[a] = 1;

  const auto increments = increments_at_level(m, n);
  double flagged = 0;
  for (int bi = 0; bi < m.filt.levels[n].size(); ++bi) {
    const double v = norm(spec, increments[bi]);
    for (const auto a : m.filt.levels[n].blocks[bi].atoms)
      if (atom_flags[a] && in_omega[a]) flagged += rational_to_double(m.filt.atom_mass[a]) * v * v;
  }
  report.flagged_energy = flagged;
  const double threshold = 2.0 / (t * t);
  if (flagged < threshold - 1e-12) {
    report.reason = "not applicable: flagged increment energy " + std::to_string(flagged) +
                    " below 2/t^2 = " + std::to_string(threshold);
    return report;
  }

  report.applicable = true;
  report.energy_prev = expected_norm_squared(m, n - 1, spec);
  report.energy_curr = expected_norm_squared(m, n, spec);
  report.required_gain = 1.0 / (t * t * i);
  report.slack = report.energy_curr - report.energy_prev - report.required_gain;
  report.holds = report.slack >= -1e-12;
  return report;
}

pair_energy_report check_pair_energy_gain(const norm_spec& spec,
                                          const std::vector<rational>& masses,
                                          const std::vector<function_vector>& f,
                                          const std::vector<function_vector>& g, int i, double t,
                                          const std::vector<bool>& flags) {
  const std::size_t count = masses.size();
  if (f.size() != count || g.size() != count || flags.size() != count)
    throw input_error("pair energy check: mismatched sizes");
  if (i < 1 || !(t > 0)) throw input_error("pair energy check needs i >= 1 and t > 0");

  pair_energy_report report;
  double ef = 0, flagged = 0;
  for (std::size_t a = 0; a < count; ++a) {
    const double mass = rational_to_double(masses[a]);
    const double nf = norm(spec, f[a]);
    ef += mass * nf * nf;
    if (flags[a]) {
      const double ng = norm(spec, g[a]);
      flagged += mass * ng * ng;
    }
  }
  if (ef > 1 + 1e-12) {
    report.reason = "not applicable: E|f|^2 > 1";
    return report;
  }
  if (flagged < 2.0 / (t * t) - 1e-12) {
    report.reason = "not applicable: flagged |g|^2 integral below 2/t^2";
    return report;
  }
  report.applicable = true;
  double lhs = 0;
  for (std::size_t a = 0; a < count; ++a) {
    const double mass = rational_to_double(masses[a]);
    const double np = norm(spec, f[a] + g[a]);
    const double nm = norm(spec, f[a] - g[a]);
    lhs += mass * (np * np + nm * nm);
  }
  report.lhs = lhs;
  report.rhs = 2 * ef + 1.0 / (t * t * i);
  report.slack = report.lhs - report.rhs;
  report.holds = report.slack >= -1e-12;
  return report;
}

}  // namespace ured
