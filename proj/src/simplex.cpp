#include "ured/simplex.hpp"

#include <algorithm>

#include "ured/errors.hpp"

namespace ured {
namespace lp {

namespace {

struct tableau {
  // rows() x cols() coefficient matrix, plus rhs per row.
  std::vector<std::vector<rational>> t;
  std::vector<rational> rhs;
  std::vector<int> basis;          // basis[i] = column basic in row i
  std::vector<rational> obj_row;   // reduced costs for the current phase
  rational obj_value;
  std::vector<char> enterable;     // artificials get barred here

  [[nodiscard]] int rows() const { return static_cast<int>(t.size()); }
  [[nodiscard]] int cols() const { return static_cast<int>(obj_row.size()); }

  void pivot(int row, int col) {
    const rational p = t[row][col];
    for (auto& v : t[row]) v /= p;
    rhs[row] /= p;
    for (int r = 0; r < rows(); ++r) {
      if (r == row || t[r][col] == 0) continue;
      const rational factor = t[r][col];
      for (int c = 0; c < cols(); ++c) t[r][c] -= factor * t[row][c];
      rhs[r] -= factor * rhs[row];
    }
    if (obj_row[col] != 0) {
      const rational factor = obj_row[col];
      for (int c = 0; c < cols(); ++c) obj_row[c] -= factor * t[row][c];
      obj_value += factor * rhs[row];
    }
    basis[row] = col;
  }

  void load_costs(const std::vector<rational>& costs) {
    obj_row = costs;
    obj_value = 0;
    for (int r = 0; r < rows(); ++r) {
      const rational cb = costs[basis[r]];
      if (cb == 0) continue;
      for (int c = 0; c < cols(); ++c) obj_row[c] -= cb * t[r][c];
      obj_value += cb * rhs[r];
    }
  }

  /// Bland's rule; returns false when optimal, throws on unbounded.
  bool step() {
    int entering = -1;
    for (int c = 0; c < cols(); ++c) {
      if (enterable[c] && obj_row[c] > 0) {
        entering = c;
        break;
      }
    }
    if (entering < 0) return false;
    int leaving = -1;
    rational best_ratio;
    for (int r = 0; r < rows(); ++r) {
      if (t[r][entering] <= 0) continue;
      const rational ratio = rhs[r] / t[r][entering];
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (leaving < 0) throw unbounded_signal{};
    pivot(leaving, entering);
    return true;
  }

  struct unbounded_signal {};
};

void verify_certificate(const problem& prob, const solution& sol) {
  const int m = prob.rows();
  const int n = prob.cols();
  for (const auto& v : sol.x)
    if (v < 0) throw invariant_error("simplex: negative primal variable");
  rational primal_value = 0;
  for (int j = 0; j < n; ++j) primal_value += prob.objective[j] * sol.x[j];
  if (primal_value != sol.value) throw invariant_error("simplex: objective mismatch");

  rational dual_value = 0;
  for (int i = 0; i < m; ++i) {
    rational lhs = 0;
    for (int j = 0; j < n; ++j) lhs += prob.coeffs[i][j] * sol.x[j];
    switch (prob.relations[i]) {
      case relation::less_equal:
        if (lhs > prob.rhs[i]) throw invariant_error("simplex: <= row violated");
        if (sol.dual[i] < 0) throw invariant_error("simplex: dual sign on <= row");
        break;
      case relation::greater_equal:
        if (lhs < prob.rhs[i]) throw invariant_error("simplex: >= row violated");
        if (sol.dual[i] > 0) throw invariant_error("simplex: dual sign on >= row");
        break;
      case relation::equal:
        if (lhs != prob.rhs[i]) throw invariant_error("simplex: = row violated");
        break;
    }
    dual_value += sol.dual[i] * prob.rhs[i];
  }
  for (int j = 0; j < n; ++j) {
    rational col = 0;
    for (int i = 0; i < m; ++i) col += sol.dual[i] * prob.coeffs[i][j];
    if (col < prob.objective[j]) throw invariant_error("simplex: dual infeasible column");
  }
  if (dual_value != sol.value) throw invariant_error("simplex: strong duality gap");
}

/// Solves transpose(B) y = costs_B exactly by Gaussian elimination.
std::vector<rational> solve_dual_system(const std::vector<std::vector<rational>>& basis_cols,
                                        const std::vector<rational>& costs_b) {
  const int m = static_cast<int>(basis_cols.size());
  // aug[j][i] = basis column j evaluated at row i  (i.e. B^T), augmented.
  std::vector<std::vector<rational>> aug(m, std::vector<rational>(m + 1));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) aug[j][i] = basis_cols[j][i];
    aug[j][m] = costs_b[j];
  }
  for (int col = 0; col < m; ++col) {
    int pivot_row = -1;
    for (int r = col; r < m; ++r) {
      if (aug[r][col] != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) throw invariant_error("simplex: singular basis in dual solve");
    std::swap(aug[col], aug[pivot_row]);
    const rational p = aug[col][col];
    for (int c = col; c <= m; ++c) aug[col][c] /= p;
    for (int r = 0; r < m; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const rational factor = aug[r][col];
      for (int c = col; c <= m; ++c) aug[r][c] -= factor * aug[col][c];
    }
  }
  std::vector<rational> y(m);
  for (int i = 0; i < m; ++i) y[i] = aug[i][m];
  return y;
}

}  // namespace

solution maximize(const problem& prob) {
  const int m = prob.rows();
  const int n = prob.cols();
  if (static_cast<int>(prob.relations.size()) != m || static_cast<int>(prob.rhs.size()) != m)
    throw input_error("simplex: inconsistent row counts");
  for (const auto& row : prob.coeffs)
    if (static_cast<int>(row.size()) != n) throw input_error("simplex: ragged coefficient row");

  // Normalize to nonnegative rhs; remember flipped rows for the duals.
  std::vector<std::vector<rational>> a(prob.coeffs);
  std::vector<relation> rel(prob.relations);
  std::vector<rational> b(prob.rhs);
  std::vector<int> row_sign(m, 1);
  for (int i = 0; i < m; ++i) {
    if (b[i] < 0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
      row_sign[i] = -1;
      if (rel[i] == relation::less_equal)
        rel[i] = relation::greater_equal;
      else if (rel[i] == relation::greater_equal)
        rel[i] = relation::less_equal;
    }
  }

  // Column layout: structural | slack+surplus | artificial.
  std::vector<int> slack_col(m, -1), art_col(m, -1);
  int cols = n;
  for (int i = 0; i < m; ++i)
    if (rel[i] != relation::equal) slack_col[i] = cols++;
  const int first_artificial = cols;
  for (int i = 0; i < m; ++i)
    if (rel[i] != relation::less_equal) art_col[i] = cols++;

  tableau tab;
  tab.t.assign(m, std::vector<rational>(cols, rational(0)));
  tab.rhs = b;
  tab.basis.assign(m, -1);
  tab.enterable.assign(cols, 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) tab.t[i][j] = a[i][j];
    if (slack_col[i] >= 0)
      tab.t[i][slack_col[i]] = rel[i] == relation::less_equal ? 1 : -1;
    if (art_col[i] >= 0) {
      tab.t[i][art_col[i]] = 1;
      tab.basis[i] = art_col[i];
    } else {
      tab.basis[i] = slack_col[i];
    }
  }

  std::vector<char> row_alive(m, 1);
  try {
    if (first_artificial < cols) {
      std::vector<rational> phase1(cols, rational(0));
      for (int c = first_artificial; c < cols; ++c) phase1[c] = -1;
      tab.load_costs(phase1);
      while (tab.step()) {
      }
      if (tab.obj_value < 0) return {lp_status::infeasible, rational(0), {}, {}};
      // Pivot leftover artificials out; an all-zero row is redundant.
      for (int r = 0; r < m; ++r) {
        if (tab.basis[r] < first_artificial) continue;
        int col = -1;
        for (int c = 0; c < first_artificial; ++c) {
          if (tab.t[r][c] != 0) {
            col = c;
            break;
          }
        }
        if (col >= 0) {
          tab.pivot(r, col);
        } else {
          row_alive[r] = 0;  // redundant constraint
        }
      }
      for (int c = first_artificial; c < cols; ++c) tab.enterable[c] = 0;
      // Drop redundant rows entirely.
      if (std::find(row_alive.begin(), row_alive.end(), 0) != row_alive.end()) {
        tableau compact;
        compact.enterable = tab.enterable;
        for (int r = 0; r < m; ++r) {
          if (!row_alive[r]) continue;
          compact.t.push_back(std::move(tab.t[r]));
          compact.rhs.push_back(std::move(tab.rhs[r]));
          compact.basis.push_back(tab.basis[r]);
        }
        compact.obj_row.assign(cols, rational(0));
        tab = std::move(compact);
      }
    }

    std::vector<rational> phase2(cols, rational(0));
    for (int j = 0; j < n; ++j) phase2[j] = prob.objective[j];
    tab.load_costs(phase2);
    while (tab.step()) {
    }
  } catch (const tableau::unbounded_signal&) {
    return {lp_status::unbounded, rational(0), {}, {}};
  }

  solution sol;
  sol.status = lp_status::optimal;
  sol.value = tab.obj_value;
  sol.x.assign(n, rational(0));
  for (int r = 0; r < tab.rows(); ++r)
    if (tab.basis[r] < n) sol.x[tab.basis[r]] = tab.rhs[r];

  // Duals from the final basis, using the untransformed normalized columns.
  std::vector<int> alive_rows;
  for (int i = 0; i < m; ++i)
    if (row_alive[i]) alive_rows.push_back(i);
  const int live = static_cast<int>(alive_rows.size());
  std::vector<std::vector<rational>> basis_cols(live, std::vector<rational>(live, rational(0)));
  std::vector<rational> costs_b(live, rational(0));
  for (int r = 0; r < live; ++r) {
    const int col = tab.basis[r];
    costs_b[r] = col < n ? prob.objective[col] : rational(0);
    for (int i = 0; i < live; ++i) {
      const int orig = alive_rows[i];
      if (col < n)
        basis_cols[r][i] = a[orig][col];
      else if (col == slack_col[orig])
        basis_cols[r][i] = rel[orig] == relation::less_equal ? 1 : -1;
      else
        basis_cols[r][i] = 0;
    }
  }
  const auto y = solve_dual_system(basis_cols, costs_b);
  sol.dual.assign(m, rational(0));
  for (int i = 0; i < live; ++i) sol.dual[alive_rows[i]] = rational(row_sign[alive_rows[i]]) * y[i];

  verify_certificate(prob, sol);
  return sol;
}

}  // namespace lp
}  // namespace ured
