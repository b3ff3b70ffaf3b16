#include "ured/oracle.hpp"

#include <bit>

#include "ured/errors.hpp"

namespace ured {

oracle_report brute_force_indices(const set_family& family) {
  family.validate();
  const int m = family.size();
  if (m > 20) throw input_error("brute-force oracle limited to 20 sets");
  const auto total = std::uint32_t{1} << m;

  // AND of the member sets of every subfamily, built incrementally from the
  // subfamily without its lowest-index member.
  std::vector<point_set> meet(total);
  point_set full(family.ground.size);
  for (int p = 0; p < family.ground.size; ++p) full.add(p);
  meet[0] = full;
  for (std::uint32_t s = 1; s < total; ++s) {
    const int low = std::countr_zero(s);
    meet[s] = meet[s & (s - 1)].intersection(family.sets[low]);
  }

  // Largest intersecting subfamily inside each subfamily: if the subfamily
  // itself intersects that is its size, otherwise drop one member.
  std::vector<int> largest(total, 0);
  for (std::uint32_t s = 1; s < total; ++s) {
    if (!meet[s].empty()) {
      largest[s] = std::popcount(s);
      continue;
    }
    int best = 0;
    for (std::uint32_t bits = s; bits != 0; bits &= bits - 1) {
      const std::uint32_t without = s ^ (bits & (0u - bits));
      best = std::max(best, largest[without]);
    }
    largest[s] = best;
  }

  oracle_report report;
  report.l_value = largest[total - 1];
  report.gamma.assign(m, m + 1);
  for (std::uint32_t s = 1; s < total; ++s) {
    const int k = std::popcount(s);
    report.gamma[k - 1] = std::min(report.gamma[k - 1], largest[s]);
  }

  bool have = false;
  for (int k = 1; k <= m; ++k) {
    const rational value = rational(report.gamma[k - 1]) / rational(k);
    if (!have || value < report.win_value) {
      report.win_value = value;
      have = true;
    }
  }
  if (m >= 2) {
    rational best;
    have = false;
    for (int k = 2; k <= m; ++k) {
      const rational value = rational(report.gamma[k - 1]) / rational(k - 1);
      if (!have || value < best) {
        best = value;
        have = true;
      }
    }
    report.win_tilde_value = best;
  }
  return report;
}

}  // namespace ured
