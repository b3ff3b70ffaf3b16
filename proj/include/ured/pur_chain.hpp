#pragma once

#include "ured/function_vector.hpp"
#include "ured/measure.hpp"

namespace ured {

/// The three-step estimate that bounds a functional gap by the norm defect
/// of the renorming sqrt(sup^2 + integral of the square):
///
///   (int f (x-y) dmu)^2
///     <= (int f^2 dmu) * (int (x-y)^2 dmu)                    Cauchy-Schwarz
///     <= (int f^2 dmu) * (2(sup|x|^2 + sup|y|^2) - sup|x+y|^2
///                          + int (x-y)^2 dmu)                 convexity of sup^2
///      = (int f^2 dmu) * (2(T(x)^2 + T(y)^2) - T(x+y)^2)      definition of T
///
/// with T the renormed norm. Each step is also verified in exact rational
/// arithmetic; the reported booleans use the documented 1e-10 relative
/// tolerance on the double evaluations.
struct pur_chain_report {
  double functional_sq = 0;       // left end of the chain
  double cauchy_schwarz_rhs = 0;  // after step 1
  double convexity_rhs = 0;       // after step 2
  double renorm_rhs = 0;          // right end (must equal step 2 exactly)
  bool cauchy_schwarz_holds = false;
  bool convexity_holds = false;
  bool identity_holds = false;
  bool exact_verified = false;  // the same three steps in rational arithmetic
  bool all_hold = false;
};

/// Requires mu to be a strictly positive probability measure.
pur_chain_report pur_chain_check(const measure& mu, const function_vector& f,
                                 const function_vector& x, const function_vector& y);

}  // namespace ured
