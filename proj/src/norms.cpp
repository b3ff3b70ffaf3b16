#include "ured/norms.hpp"

#include <cmath>

#include "ured/errors.hpp"

namespace ured {

norm_kind parse_norm_kind(const std::string& name) {
  if (name == "sup") return norm_kind::sup;
  if (name == "l2") return norm_kind::l2;
  if (name == "triple") return norm_kind::triple;
  if (name == "euclidean") return norm_kind::euclidean;
  throw input_error("unknown norm '" + name + "' (expected sup|l2|triple|euclidean)");
}

std::string norm_kind_name(norm_kind kind) {
  switch (kind) {
    case norm_kind::sup: return "sup";
    case norm_kind::l2: return "l2";
    case norm_kind::triple: return "triple";
    case norm_kind::euclidean: return "euclidean";
  }
  return "?";
}

norm_spec norm_spec::sup_spec() { return {norm_kind::sup, {}}; }
norm_spec norm_spec::euclidean_spec() { return {norm_kind::euclidean, {}}; }
norm_spec norm_spec::l2_spec(measure mu) { return {norm_kind::l2, std::move(mu)}; }
norm_spec norm_spec::triple_spec(measure mu) { return {norm_kind::triple, std::move(mu)}; }

void norm_spec::validate(int ground_size) const {
  if (kind == norm_kind::l2 || kind == norm_kind::triple) {
    mu.validate();
    if (mu.size() != ground_size) throw input_error("norm measure has wrong ground size");
    if (!mu.is_probability()) throw input_error("norm measure must be a probability measure");
  }
}

namespace {

double sup_norm_real(const real_vector& f) {
  double best = 0;
  for (const double v : f.values) best = std::max(best, std::fabs(v));
  return best;
}

double l2sq_real(const measure& mu, const real_vector& f) {
  double sum = 0;
  for (int i = 0; i < f.size(); ++i)
    sum += rational_to_double(mu.weights[i]) * f.values[i] * f.values[i];
  return sum;
}

}  // namespace

double norm(const norm_spec& spec, const real_vector& f) {
  switch (spec.kind) {
    case norm_kind::sup:
      return sup_norm_real(f);
    case norm_kind::l2:
      return std::sqrt(l2sq_real(spec.mu, f));
    case norm_kind::triple: {
      const double s = sup_norm_real(f);
      return std::sqrt(s * s + l2sq_real(spec.mu, f));
    }
    case norm_kind::euclidean: {
      double sum = 0;
      for (const double v : f.values) sum += v * v;
      return std::sqrt(sum);
    }
  }
  return 0;
}

double norm(const norm_spec& spec, const function_vector& f) { return norm(spec, to_real(f)); }

rational l2_squared(const measure& mu, const function_vector& f) {
  if (mu.size() != f.size()) throw input_error("measure and function have different ground sizes");
  rational sum = 0;
  for (int i = 0; i < f.size(); ++i) sum += mu.weights[i] * f.values[i] * f.values[i];
  return sum;
}

rational norm_squared_exact(const norm_spec& spec, const function_vector& f) {
  switch (spec.kind) {
    case norm_kind::sup: {
      const rational s = sup_norm(f);
      return s * s;
    }
    case norm_kind::l2:
      return l2_squared(spec.mu, f);
    case norm_kind::triple: {
      const rational s = sup_norm(f);
      return s * s + l2_squared(spec.mu, f);
    }
    case norm_kind::euclidean: {
      rational sum = 0;
      for (const auto& v : f.values) sum += v * v;
      return sum;
    }
  }
  return 0;
}

real_vector scale(const real_vector& f, double s) {
  real_vector out(f.size());
  for (int i = 0; i < f.size(); ++i) out.values[i] = s * f.values[i];
  return out;
}

real_vector add(const real_vector& a, const real_vector& b) {
  real_vector out(a.size());
  for (int i = 0; i < a.size(); ++i) out.values[i] = a.values[i] + b.values[i];
  return out;
}

real_vector subtract(const real_vector& a, const real_vector& b) {
  real_vector out(a.size());
  for (int i = 0; i < a.size(); ++i) out.values[i] = a.values[i] - b.values[i];
  return out;
}

}  // namespace ured
