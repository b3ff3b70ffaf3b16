#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ured/filtration.hpp"
#include "ured/function_vector.hpp"
#include "ured/norms.hpp"

namespace ured {

/// Vector-valued random variable constant on each block of one filtration
/// level.
struct simple_rv {
  int level = 0;
  std::vector<function_vector> block_values;  // one per block of that level
};

/// Discrete martingale: levels M_0..M_T adapted to a filtration, with
/// increments integrating to zero over every block of the previous level.
struct martingale {
  filtration filt;
  std::vector<simple_rv> levels;

  [[nodiscard]] int top_level() const { return static_cast<int>(levels.size()) - 1; }

  /// dM_n on the given level-n block (dM_0 = M_0).
  [[nodiscard]] function_vector increment(int n, int block_index) const;

  /// Value at an atom on level n.
  [[nodiscard]] const function_vector& value_at(int n, atom_index atom) const;
};

/// All increments of one level at once (dM_0 = M_0), one per level-n block.
std::vector<function_vector> increments_at_level(const martingale& m, int n);

struct validation_report {
  bool valid = false;
  std::vector<std::string> violations;
  int paley_pairs_checked = 0;  // antisymmetry dM(E+) = -dM(E-) verified on each
};

/// Exact check of the structural invariants and the zero-conditional-mean
/// law at every level and block. Detected Walsh-Paley pairs always exhaust
/// their parent block, so the antisymmetry of the increment across each pair
/// is forced by the law; it is still verified and counted.
validation_report validate_martingale(const martingale& m);

struct monotonicity_report {
  bool holds = false;
  bool exact = false;        // true when compared in rational arithmetic
  double min_slack = 0.0;    // smallest lhs - rhs over all blocks (normalized)
  int worst_level = -1;
  int worst_block = -1;
};

/// Blockwise growth of the expected squared norm: for every n and every
/// block E of level n-1, the mass-weighted sum of |M_n|^2 over E is at least
/// that of |M_{n-1}|^2. Exact rational comparison when `exact`; otherwise
/// floating evaluation with slack tolerance 1e-12.
monotonicity_report check_norm_square_monotone(const martingale& m, const norm_spec& spec,
                                               bool exact = false);

/// E|M_n|^2 under the spec's norm, in doubles.
double expected_norm_squared(const martingale& m, int n, const norm_spec& spec);
rational expected_norm_squared_exact(const martingale& m, int n, const norm_spec& spec);

struct energy_gain_report {
  bool applicable = false;
  std::string reason;         // filled when not applicable
  double energy_prev = 0.0;   // E|M_{n-1}|^2
  double energy_curr = 0.0;   // E|M_n|^2
  double flagged_energy = 0.0;  // integral of |dM_n|^2 over flags /\ Omega_n
  double required_gain = 0.0;   // 1/(t^2 i)
  double slack = 0.0;
  bool holds = false;
};

/// Energy-gain inequality for a martingale level: when sup_k E|M_k|^2 <= 1
/// and the flagged region (intersected with the Walsh-Paley core Omega_n)
/// carries increment energy >= 2/t^2, then E|M_n|^2 >= E|M_{n-1}|^2 +
/// 1/(t^2 i). A failed hypothesis is reported as not applicable, never as a
/// counterexample.
energy_gain_report check_energy_gain(const martingale& m, int n, int i, double t,
                                     const norm_spec& spec, const std::vector<bool>& atom_flags);

/// Two-variable form on a common finite space: if E|f|^2 <= 1 and the
/// flagged region carries integral |g|^2 >= 2/t^2, then
/// E(|f+g|^2 + |f-g|^2) >= 2 E|f|^2 + 1/(t^2 i).
struct pair_energy_report {
  bool applicable = false;
  std::string reason;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = false;
};
pair_energy_report check_pair_energy_gain(const norm_spec& spec,
                                          const std::vector<rational>& masses,
                                          const std::vector<function_vector>& f,
                                          const std::vector<function_vector>& g, int i, double t,
                                          const std::vector<bool>& flags);

}  // namespace ured
