#pragma once

#include <vector>

#include "ured/rational.hpp"

namespace ured {
namespace lp {

enum class relation { less_equal, greater_equal, equal };

enum class lp_status { optimal, infeasible, unbounded };

/// maximize objective . x  subject to  coeffs[i] . x  (relations[i])  rhs[i],
/// x >= 0 componentwise.
struct problem {
  std::vector<std::vector<rational>> coeffs;
  std::vector<relation> relations;
  std::vector<rational> rhs;
  std::vector<rational> objective;

  [[nodiscard]] int rows() const { return static_cast<int>(coeffs.size()); }
  [[nodiscard]] int cols() const { return static_cast<int>(objective.size()); }
};

struct solution {
  lp_status status = lp_status::infeasible;
  rational value;
  std::vector<rational> x;
  /// One multiplier per constraint row: >= 0 for <= rows, <= 0 for >= rows,
  /// free for equalities; satisfies dual feasibility and value = dual . rhs.
  std::vector<rational> dual;
};

/// Dense two-phase simplex with Bland's anti-cycling rule, exact rational
/// arithmetic throughout. Every optimal result is re-verified against the
/// original data (primal feasibility, dual feasibility, equal objectives);
/// a failed check throws invariant_error, so results can be trusted as
/// certificates.
solution maximize(const problem& prob);

}  // namespace lp
}  // namespace ured
