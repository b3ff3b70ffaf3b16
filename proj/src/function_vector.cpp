#include "ured/function_vector.hpp"

#include "ured/errors.hpp"

namespace ured {

namespace {

void check_same_size(const function_vector& a, const function_vector& b) {
  if (a.size() != b.size()) throw input_error("function vectors have different ground sizes");
}

}  // namespace

function_vector operator+(const function_vector& a, const function_vector& b) {
  check_same_size(a, b);
  function_vector out(a.size());
  for (int i = 0; i < a.size(); ++i) out.values[i] = a.values[i] + b.values[i];
  return out;
}

function_vector operator-(const function_vector& a, const function_vector& b) {
  check_same_size(a, b);
  function_vector out(a.size());
  for (int i = 0; i < a.size(); ++i) out.values[i] = a.values[i] - b.values[i];
  return out;
}

function_vector operator-(const function_vector& a) {
  function_vector out(a.size());
  for (int i = 0; i < a.size(); ++i) out.values[i] = -a.values[i];
  return out;
}

function_vector operator*(const rational& scale, const function_vector& a) {
  function_vector out(a.size());
  for (int i = 0; i < a.size(); ++i) out.values[i] = scale * a.values[i];
  return out;
}

function_vector hadamard(const function_vector& a, const function_vector& b) {
  check_same_size(a, b);
  function_vector out(a.size());
  for (int i = 0; i < a.size(); ++i) out.values[i] = a.values[i] * b.values[i];
  return out;
}

rational sup_norm(const function_vector& f) {
  rational best = 0;
  for (const auto& v : f.values) {
    const rational a = rational_abs(v);
    if (a > best) best = a;
  }
  return best;
}

truncation truncate_decompose(const function_vector& g) {
  truncation t;
  t.inner = function_vector(g.size());
  t.outer = function_vector(g.size());
  for (int i = 0; i < g.size(); ++i) {
    const rational& v = g.values[i];
    rational clamped = v;
    if (v > 1) clamped = 1;
    if (v < -1) clamped = -1;
    t.inner.values[i] = clamped;
    t.outer.values[i] = v - clamped;
  }
  return t;
}

function_vector indicator_bump(const point_set& support) {
  if (support.empty()) throw input_error("empty set has no bump function");
  function_vector f(support.universe());
  for (const int p : support.indices()) f.values[p] = 1;
  return f;
}

void validate_bump(const function_vector& f, const point_set& support) {
  if (f.size() != support.universe()) throw input_error("bump function has wrong ground size");
  if (support.empty()) throw input_error("empty set has no bump function");
  for (int i = 0; i < f.size(); ++i)
    if (!support.contains(i) && f.values[i] != 0)
      throw input_error("bump function is nonzero off its set (point " + std::to_string(i) + ")");
  if (sup_norm(f) != 1) throw input_error("bump function must have sup norm exactly 1");
}

void validate_bump_range(const function_vector& f, const point_set& support) {
  validate_bump(f, support);
  for (int i = 0; i < f.size(); ++i)
    if (f.values[i] < 0 || f.values[i] > 1)
      throw input_error("bump function value outside [0, 1] at point " + std::to_string(i));
}

real_vector to_real(const function_vector& f) {
  real_vector out(f.size());
  for (int i = 0; i < f.size(); ++i) out.values[i] = rational_to_double(f.values[i]);
  return out;
}

}  // namespace ured
