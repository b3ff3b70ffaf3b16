#include "ured/intersection_lp.hpp"

#include <algorithm>

#include "ured/errors.hpp"
#include "ured/simplex.hpp"

namespace ured {

lp_certificate max_min_measure(const set_family& family) {
  family.validate();
  const int n = family.ground.size;
  const int m = family.size();

  // Variables: mu_0..mu_{n-1}, v+ and v- (v free, split).
  lp::problem prob;
  const int vp = n, vm = n + 1;
  prob.objective.assign(n + 2, rational(0));
  prob.objective[vp] = 1;
  prob.objective[vm] = -1;
  for (int j = 0; j < m; ++j) {
    std::vector<rational> row(n + 2, rational(0));
    for (const int p : family.sets[j].indices()) row[p] = 1;
    row[vp] = -1;
    row[vm] = 1;
    prob.coeffs.push_back(std::move(row));
    prob.relations.push_back(lp::relation::greater_equal);
    prob.rhs.emplace_back(0);
  }
  std::vector<rational> mass_row(n + 2, rational(0));
  for (int p = 0; p < n; ++p) mass_row[p] = 1;
  prob.coeffs.push_back(std::move(mass_row));
  prob.relations.push_back(lp::relation::equal);
  prob.rhs.emplace_back(1);

  const auto sol = lp::maximize(prob);
  if (sol.status != lp::lp_status::optimal)
    throw invariant_error("max-min measure LP must be feasible and bounded");

  lp_certificate cert;
  cert.status = lp_certificate::state::optimal;
  cert.value = sol.value;
  cert.primal.ground = family.ground;
  cert.primal.weights.assign(sol.x.begin(), sol.x.begin() + n);
  cert.dual.resize(m);
  for (int j = 0; j < m; ++j) cert.dual[j] = -sol.dual[j];  // >= rows carry duals <= 0

  // Independent certificate checks beyond the solver's own.
  rational dual_sum = 0;
  for (const auto& w : cert.dual) {
    if (w < 0) throw invariant_error("negative dual set weight");
    dual_sum += w;
  }
  if (dual_sum != 1) throw invariant_error("dual set weights must sum to 1");
  rational cover = 0;
  for (int p = 0; p < n; ++p) {
    rational c = 0;
    for (int j = 0; j < m; ++j)
      if (family.sets[j].contains(p)) c += cert.dual[j];
    cover = std::max(cover, c);
  }
  if (cover != cert.value) throw invariant_error("dual cover value differs from LP value");
  if (!cert.primal.is_probability()) throw invariant_error("primal measure not a probability");
  for (int j = 0; j < m; ++j)
    if (cert.primal.mass_of(family.sets[j]) < cert.value)
      throw invariant_error("primal measure misses the LP value on a set");
  return cert;
}

namespace {

struct rep_search {
  const set_family* family = nullptr;
  int max_len = 0;
  std::vector<int> counts;
  std::vector<int> degrees;  // per point, weighted by multiplicity
  bool have = false;
  repetition_result best;

  void visit_leaf(int length) {
    if (length == 0) return;
    int top = 0;
    for (const int d : degrees) top = std::max(top, d);
    const rational value = rational(top) / rational(length);
    if (!have || value < best.value) {
      have = true;
      best.value = value;
      best.length = length;
      best.multiplicity = counts;
    }
  }

  void recurse(int index, int used) {
    if (index == family->size()) {
      visit_leaf(used);
      return;
    }
    const auto support = family->sets[index].indices();
    for (int c = 0; c + used <= max_len; ++c) {
      counts[index] = c;
      if (c > 0)
        for (const int p : support) degrees[p] += 1;
      recurse(index + 1, used + c);
    }
    for (const int p : support) degrees[p] -= counts[index];
    counts[index] = 0;
  }
};

}  // namespace

repetition_result kelley_number_rep(const set_family& family, int max_len) {
  family.validate();
  if (max_len < 1) throw input_error("max_len must be at least 1");
  rep_search search;
  search.family = &family;
  search.max_len = max_len;
  search.counts.assign(family.size(), 0);
  search.degrees.assign(family.ground.size, 0);
  search.recurse(0, 0);
  return search.best;
}

duality_report verify_duality(const set_family& family, int max_len) {
  const auto cert = max_min_measure(family);
  const auto rep = kelley_number_rep(family, max_len);

  duality_report report;
  report.lp_value = cert.value;
  rational cover = 0;
  for (int p = 0; p < family.ground.size; ++p) {
    rational c = 0;
    for (int j = 0; j < family.size(); ++j)
      if (family.sets[j].contains(p)) c += cert.dual[j];
    cover = std::max(cover, c);
  }
  report.dual_cover_value = cover;
  report.primal_dual_equal = cover == cert.value;
  report.rep_value = rep.value;
  report.rep_length = rep.length;
  report.gap = rep.value - cert.value;
  if (report.gap < 0)
    throw invariant_error("sequence value fell below the LP value; sequences bound it from above");
  return report;
}

}  // namespace ured
