#include "ured/pur_chain.hpp"

#include <cmath>

#include "ured/errors.hpp"
#include "ured/norms.hpp"

namespace ured {

namespace {

bool leq_with_tolerance(double lhs, double rhs) {
  const double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
  return lhs <= rhs + 1e-10 * scale;
}

bool eq_with_tolerance(double lhs, double rhs) {
  return leq_with_tolerance(lhs, rhs) && leq_with_tolerance(rhs, lhs);
}

}  // namespace

pur_chain_report pur_chain_check(const measure& mu, const function_vector& f,
                                 const function_vector& x, const function_vector& y) {
  mu.validate();
  if (!mu.strictly_positive()) throw input_error("measure not strictly positive");
  if (!mu.is_probability()) throw input_error("measure must be a probability measure");
  const int n = mu.size();
  if (f.size() != n || x.size() != n || y.size() != n)
    throw input_error("chain check: mismatched ground sizes");

  const function_vector diff = x - y;
  rational pairing = 0;  // int f (x-y) dmu
  for (int i = 0; i < n; ++i) pairing += mu.weights[i] * f.values[i] * diff.values[i];
  const rational f_sq = l2_squared(mu, f);
  const rational diff_sq = l2_squared(mu, diff);

  const rational sup_x = sup_norm(x), sup_y = sup_norm(y), sup_xy = sup_norm(x + y);
  const rational sup_defect = 2 * (sup_x * sup_x + sup_y * sup_y) - sup_xy * sup_xy;

  const auto triple = norm_spec::triple_spec(mu);
  const rational tx = norm_squared_exact(triple, x);
  const rational ty = norm_squared_exact(triple, y);
  const rational txy = norm_squared_exact(triple, x + y);

  const rational lhs_exact = pairing * pairing;
  const rational cs_exact = f_sq * diff_sq;
  const rational conv_exact = f_sq * (sup_defect + diff_sq);
  const rational renorm_exact = f_sq * (2 * (tx + ty) - txy);

  pur_chain_report report;
  report.functional_sq = rational_to_double(lhs_exact);
  report.cauchy_schwarz_rhs = rational_to_double(cs_exact);
  report.convexity_rhs = rational_to_double(conv_exact);
  report.renorm_rhs = rational_to_double(renorm_exact);

  report.cauchy_schwarz_holds =
      leq_with_tolerance(report.functional_sq, report.cauchy_schwarz_rhs);
  report.convexity_holds = leq_with_tolerance(report.cauchy_schwarz_rhs, report.convexity_rhs);
  report.identity_holds = eq_with_tolerance(report.convexity_rhs, report.renorm_rhs);
  report.exact_verified =
      lhs_exact <= cs_exact && cs_exact <= conv_exact && conv_exact == renorm_exact;
  report.all_hold = report.cauchy_schwarz_holds && report.convexity_holds &&
                    report.identity_holds && report.exact_verified;
  return report;
}

}  // namespace ured
