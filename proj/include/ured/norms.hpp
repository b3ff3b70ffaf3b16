#pragma once

#include <string>

#include "ured/function_vector.hpp"
#include "ured/measure.hpp"

namespace ured {

enum class norm_kind {
  sup,        // max_i |f_i|
  l2,         // sqrt(sum mu_i f_i^2)
  triple,     // sqrt(sup^2 + sum mu_i f_i^2) -- the renorming under study
  euclidean,  // sqrt(sum f_i^2)
};

norm_kind parse_norm_kind(const std::string& name);
std::string norm_kind_name(norm_kind kind);

/// A norm on function vectors. l2 and triple carry their measure (a
/// probability measure; strict positivity is only demanded where the
/// rotundity claims need it).
struct norm_spec {
  norm_kind kind = norm_kind::sup;
  measure mu;  // used by l2 / triple

  static norm_spec sup_spec();
  static norm_spec euclidean_spec();
  static norm_spec l2_spec(measure mu);
  static norm_spec triple_spec(measure mu);

  void validate(int ground_size) const;
};

double norm(const norm_spec& spec, const real_vector& f);
double norm(const norm_spec& spec, const function_vector& f);

/// The squared norm of a rational vector is itself rational for every kind
/// implemented here; this is what makes the martingale inequalities exactly
/// checkable.
rational norm_squared_exact(const norm_spec& spec, const function_vector& f);

/// Integral of f^2 against the spec's measure (0 for measureless kinds).
rational l2_squared(const measure& mu, const function_vector& f);

real_vector scale(const real_vector& f, double s);
real_vector add(const real_vector& a, const real_vector& b);
real_vector subtract(const real_vector& a, const real_vector& b);

}  // namespace ured
