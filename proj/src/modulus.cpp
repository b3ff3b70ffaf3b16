#include "ured/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ured/errors.hpp"
#include "ured/rng.hpp"

namespace ured {

namespace {

bool lex_less(const real_vector& a, const real_vector& b) {
  return std::lexicographical_compare(a.values.begin(), a.values.end(), b.values.begin(),
                                      b.values.end());
}

struct feasible_pair {
  bool ok = false;
  double value = std::numeric_limits<double>::infinity();  // 1 - |(x+y)/2|
  double separation = 0;
  real_vector x, y;
};

/// Feasible pairs anchored at x = v/|v|: y = x - r zhat is on the unit
/// sphere exactly for r in the root set of g(r) = |x - r zhat| = 1. g is
/// convex with g(0) = 1, so that set is {0, R} for strictly convex norms and
/// an interval [0, R] where the sphere is flat; by convexity of
/// |x - (r/2) zhat| in r the midpoint objective over [eps, R] is minimized
/// at an endpoint. So R and (when still on the sphere) eps are the only
/// separations worth evaluating.
class pair_search {
 public:
  pair_search(const norm_spec& spec, real_vector zhat, double epsilon)
      : spec_(spec), zhat_(std::move(zhat)), epsilon_(epsilon) {}

  feasible_pair probe(const real_vector& v) const {
    feasible_pair out;
    const double nv = norm(spec_, v);
    if (nv < 1e-12) return out;
    const real_vector x = scale(v, 1.0 / nv);

    const auto offset_norm = [&](double r) {
      real_vector y = x;
      for (int i = 0; i < y.size(); ++i) y.values[i] -= r * zhat_.values[i];
      return norm(spec_, y);
    };

    // Largest root of g(r) = 1: expand past it (g(r) > 1 for r > 2 since
    // unit vectors are at most 2 apart), then bisect with g(lo) <= 1 < g(hi).
    double lo = 0, hi = std::max(1.0, epsilon_);
    int guard = 0;
    while (offset_norm(hi) <= 1 && guard++ < 60) hi *= 1.5;
    if (offset_norm(hi) <= 1) return out;
    for (int it = 0; it < 55; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (offset_norm(mid) <= 1)
        lo = mid;
      else
        hi = mid;
    }
    const double big = lo;
    if (big < epsilon_ * (1 - 1e-12)) return out;

    const auto consider = [&](double r) {
      real_vector y = x;
      real_vector mid = x;
      for (int i = 0; i < x.size(); ++i) {
        y.values[i] -= r * zhat_.values[i];
        mid.values[i] -= 0.5 * r * zhat_.values[i];
      }
      const double value = 1.0 - norm(spec_, mid);
      if (!out.ok || value < out.value) {
        out.ok = true;
        out.value = value;
        out.separation = r;
        out.x = x;
        out.y = std::move(y);
      }
    };
    consider(big);
    if (epsilon_ < big && std::fabs(offset_norm(epsilon_) - 1) <= 1e-12) consider(epsilon_);
    return out;
  }

 private:
  const norm_spec& spec_;
  real_vector zhat_;
  double epsilon_;
};

}  // namespace

modulus_report directional_modulus_estimate(const modulus_query& query) {
  const int n = query.direction.size();
  if (n == 0) throw input_error("empty direction");
  query.spec.validate(n);
  if (!(query.epsilon > 0) || query.epsilon > 2)
    throw input_error("epsilon must lie in (0, 2]");
  const double zlen = norm(query.spec, query.direction);
  if (zlen < 1e-12) throw input_error("direction has zero norm");
  const real_vector zhat = scale(query.direction, 1.0 / zlen);

  const pair_search search(query.spec, zhat, query.epsilon);

  // Deterministic canonical starts, then seeded random ones.
  std::vector<real_vector> starts;
  const auto push_with_shifts = [&](const real_vector& base) {
    starts.push_back(base);
    for (const double shift : {0.5, -0.5, 1.0, -1.0}) {
      real_vector v = base;
      for (int i = 0; i < n; ++i) v.values[i] += shift * zhat.values[i];
      starts.push_back(std::move(v));
    }
  };
  for (int j = 0; j < n; ++j) {
    real_vector e(n);
    e.values[j] = 1;
    push_with_shifts(e);
    e.values[j] = -1;
    push_with_shifts(e);
  }
  real_vector ones(n);
  for (auto& v : ones.values) v = 1;
  push_with_shifts(ones);
  rng gen = rng::from_seed(query.seed).derive("modulus");
  while (static_cast<int>(starts.size()) < std::max(query.budget.starts, 1)) {
    real_vector v(n);
    for (auto& c : v.values) c = 2 * gen.next_double() - 1;
    starts.push_back(std::move(v));
  }

  feasible_pair best;
  const auto better = [](const feasible_pair& a, const feasible_pair& b) {
    if (!a.ok || !b.ok) return a.ok;
    if (a.value != b.value) return a.value < b.value;
    if (a.x.values != b.x.values) return lex_less(a.x, b.x);
    return lex_less(a.y, b.y);
  };

  for (const auto& v0 : starts) {
    feasible_pair current = search.probe(v0);
    real_vector v = v0;
    double step = 0.25;
    for (int it = 0; it < query.budget.refine_iters; ++it) {
      bool improved = false;
      for (int j = 0; j < n && !improved; ++j) {
        for (const double sign : {+1.0, -1.0}) {
          real_vector v_try = v;
          v_try.values[j] += sign * step;
          const auto cand = search.probe(v_try);
          if (cand.ok && (!current.ok || cand.value < current.value - 1e-15)) {
            current = cand;
            v = std::move(v_try);
            improved = true;
            break;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    if (better(current, best)) best = current;
  }

  if (!best.ok) throw invariant_error("modulus search found no feasible pair");

  modulus_report report;
  report.estimate = std::max(0.0, best.value);
  report.witness_x = best.x;
  report.witness_y = best.y;
  report.separation = best.separation;
  report.feasibility = std::max(std::fabs(norm(query.spec, best.x) - 1),
                                std::fabs(norm(query.spec, best.y) - 1));
  report.degenerate = report.estimate < report.tol;
  if (report.feasibility > 1e-9)
    throw invariant_error("modulus witness drifted off the unit sphere");
  return report;
}

double convexity_ratio(const norm_spec& spec, const real_vector& x, const real_vector& y) {
  const double ny = norm(spec, y);
  if (ny < 1e-300) throw input_error("convexity ratio needs y != 0");
  const double np = norm(spec, add(x, y));
  const double nm = norm(spec, subtract(x, y));
  const double ratio = (np * np + nm * nm) / (2 * ny * ny);
  if (ratio < 1 - 1e-12)
    throw invariant_error("convexity ratio fell below 1; squared-norm convexity violated");
  return ratio;
}

membership_report probe_membership(const norm_spec& spec, const real_vector& x, int i, double t,
                                   const search_budget& budget, std::uint64_t seed) {
  const int n = x.size();
  if (n == 0) throw input_error("empty vector");
  spec.validate(n);
  if (i < 1) throw input_error("membership index must be >= 1");
  if (!(t > 0)) throw input_error("radius ratio t must be positive");
  const double nx = norm(spec, x);
  if (nx < 1e-12) throw input_error("membership probe needs x != 0");
  const double limit = t * nx;

  const auto clampy = [&](real_vector y) -> real_vector {
    const double ny = norm(spec, y);
    if (ny > limit) return scale(y, limit / ny * (1 - 1e-15));
    return y;
  };
  const auto ratio_of = [&](const real_vector& y) -> double {
    const double ny = norm(spec, y);
    if (ny < 1e-9 * nx) return std::numeric_limits<double>::infinity();
    return convexity_ratio(spec, x, y);
  };

  std::vector<real_vector> starts;
  starts.push_back(scale(x, limit / nx));  // colinear: ratio 1 + 1/t^2 in any norm
  for (int j = 0; j < n; ++j) {
    real_vector e(n);
    e.values[j] = limit;
    starts.push_back(clampy(e));
    e.values[j] = -limit;
    starts.push_back(clampy(e));
  }
  rng gen = rng::from_seed(seed).derive("membership");
  while (static_cast<int>(starts.size()) < std::max(budget.starts, 1)) {
    real_vector y(n);
    for (auto& v : y.values) v = 2 * gen.next_double() - 1;
    const double target = limit * (0.1 + 0.9 * gen.next_double());
    const double ny = norm(spec, y);
    if (ny < 1e-12) continue;
    starts.push_back(scale(y, target / ny));
  }

  membership_report report;
  report.threshold = 1.0 + 1.0 / i;
  report.best_ratio = std::numeric_limits<double>::infinity();
  for (const auto& y0 : starts) {
    real_vector y = y0;
    double value = ratio_of(y);
    double step = 0.25 * limit;
    for (int it = 0; it < budget.refine_iters; ++it) {
      bool improved = false;
      for (int j = 0; j < n && !improved; ++j) {
        for (const double sign : {+1.0, -1.0}) {
          real_vector y_try = y;
          y_try.values[j] += sign * step;
          y_try = clampy(std::move(y_try));
          const double v = ratio_of(y_try);
          if (v < value - 1e-15) {
            value = v;
            y = std::move(y_try);
            improved = true;
            break;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    if (value < report.best_ratio ||
        (value == report.best_ratio && lex_less(y, report.witness_y))) {
      report.best_ratio = value;
      report.witness_y = y;
    }
  }
  report.certified_out = report.best_ratio < report.threshold;
  return report;
}

}  // namespace ured
