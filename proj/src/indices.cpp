#include "ured/indices.hpp"

#include <algorithm>

#include "ured/errors.hpp"

namespace ured {

namespace {

std::vector<std::vector<int>> member_supports(const set_family& family) {
  std::vector<std::vector<int>> supports;
  supports.reserve(family.sets.size());
  for (const auto& s : family.sets) supports.push_back(s.indices());
  return supports;
}

struct bnb_state {
  const std::vector<std::vector<int>>* supports = nullptr;
  int m = 0;
  int k = 0;
  int incumbent = 0;
  std::vector<int> incumbent_witness;
  std::vector<int> chosen;
  std::vector<int> counts;  // per-point membership count of the current selection
};

void search(bnb_state& st, int next_index, int current_max) {
  const int chosen_count = static_cast<int>(st.chosen.size());
  if (chosen_count == st.k) {
    if (current_max < st.incumbent) {
      st.incumbent = current_max;
      st.incumbent_witness = st.chosen;
    }
    return;
  }
  if (current_max >= st.incumbent) return;  // adding sets never lowers the degree
  for (int i = next_index; i <= st.m - (st.k - chosen_count); ++i) {
    const auto& support = (*st.supports)[i];
    int max_after = current_max;
    for (const int p : support) max_after = std::max(max_after, ++st.counts[p]);
    st.chosen.push_back(i);
    search(st, i + 1, max_after);
    st.chosen.pop_back();
    for (const int p : support) --st.counts[p];
    if (st.incumbent == 1) return;  // global floor reached
  }
}

}  // namespace

degree_result max_degree(const set_family& family) {
  family.validate();
  std::vector<int> counts(family.ground.size, 0);
  for (const auto& s : family.sets)
    for (const int p : s.indices()) ++counts[p];
  degree_result result;
  for (int p = 0; p < family.ground.size; ++p) {
    if (counts[p] > result.value) {
      result.value = counts[p];
      result.witness_point = p;
    }
  }
  return result;
}

int min_subfamily_degree(const set_family& family, int k, std::vector<int>* witness) {
  family.validate();
  const int m = family.size();
  if (k < 1 || k > m)
    throw input_error("subfamily size " + std::to_string(k) + " out of range [1, " +
                      std::to_string(m) + "]");
  const auto supports = member_supports(family);
  bnb_state st;
  st.supports = &supports;
  st.m = m;
  st.k = k;
  st.incumbent = k + 1;  // any subfamily scores at most k
  st.counts.assign(family.ground.size, 0);
  search(st, 0, 0);
  if (witness) *witness = st.incumbent_witness;
  return st.incumbent;
}

namespace {

ratio_result best_ratio(const set_family& family, int k_min, int denominator_shift) {
  ratio_result best;
  bool have = false;
  for (int k = k_min; k <= family.size(); ++k) {
    std::vector<int> wit;
    const int gamma = min_subfamily_degree(family, k, &wit);
    const rational value = rational(gamma) / rational(k - denominator_shift);
    if (!have || value < best.value) {
      best.value = value;
      best.witness = std::move(wit);
      have = true;
    }
  }
  return best;
}

}  // namespace

ratio_result weak_intersection_number(const set_family& family) {
  family.validate();
  return best_ratio(family, 1, 0);
}

ratio_result weak_intersection_number_tilde(const set_family& family) {
  family.validate();
  if (family.size() < 2) throw input_error("win~ undefined for families of size < 2");
  return best_ratio(family, 2, 1);
}

index_report compute_indices(const set_family& family) {
  family.validate();
  index_report report;
  const auto deg = max_degree(family);
  report.l_value = deg.value;
  report.l_witness_point = deg.witness_point;

  const int m = family.size();
  std::vector<std::vector<int>> witnesses(m);
  report.gamma.resize(m);
  for (int k = 1; k <= m; ++k)
    report.gamma[k - 1] = min_subfamily_degree(family, k, &witnesses[k - 1]);

  bool have = false;
  for (int k = 1; k <= m; ++k) {
    const rational value = rational(report.gamma[k - 1]) / rational(k);
    if (!have || value < report.win_value) {
      report.win_value = value;
      report.win_witness = witnesses[k - 1];
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
        report.win_tilde_witness = witnesses[k - 1];
        have = true;
      }
    }
    report.win_tilde_value = best;
  }
  return report;
}

}  // namespace ured
