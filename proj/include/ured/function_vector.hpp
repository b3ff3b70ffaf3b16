#pragma once

#include <vector>

#include "ured/rational.hpp"
#include "ured/set_family.hpp"

namespace ured {

/// One exact rational value per ground point: the finite model of a
/// continuous function. On a finite discrete space every subset is open and
/// every vector is continuous.
struct function_vector {
  std::vector<rational> values;

  function_vector() = default;
  explicit function_vector(int n) : values(n, rational(0)) {}
  explicit function_vector(std::vector<rational> v) : values(std::move(v)) {}

  [[nodiscard]] int size() const { return static_cast<int>(values.size()); }

  bool operator==(const function_vector&) const = default;
};

function_vector operator+(const function_vector& a, const function_vector& b);
function_vector operator-(const function_vector& a, const function_vector& b);
function_vector operator-(const function_vector& a);
function_vector operator*(const rational& scale, const function_vector& a);

/// Pointwise product.
function_vector hadamard(const function_vector& a, const function_vector& b);

rational sup_norm(const function_vector& f);

/// Splits g into the part outside [-1, 1] and the part inside:
/// inner = clamp(g, -1, 1), outer = g - inner. Always g = outer + inner and
/// sup|outer| = (sup|g| - 1)^+.
struct truncation {
  function_vector outer;  // g0
  function_vector inner;  // g1
};
truncation truncate_decompose(const function_vector& g);

/// 0/1 indicator of a nonempty set: value 1 on the set, 0 off it.
function_vector indicator_bump(const point_set& support);

/// Checks the bump-function contract for `support`: sup norm exactly 1 and
/// zero off the set. Throws input_error naming the failed constraint.
void validate_bump(const function_vector& f, const point_set& support);

/// Stricter range check 0 <= f <= 1 required by the martingale
/// constructions (their sup-norm bound is a convex-combination argument).
void validate_bump_range(const function_vector& f, const point_set& support);

/// Plain double vector for the numeric searches.
struct real_vector {
  std::vector<double> values;

  real_vector() = default;
  explicit real_vector(int n) : values(n, 0.0) {}
  explicit real_vector(std::vector<double> v) : values(std::move(v)) {}

  [[nodiscard]] int size() const { return static_cast<int>(values.size()); }
};

real_vector to_real(const function_vector& f);

}  // namespace ured
