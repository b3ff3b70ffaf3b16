#include "ured/rational.hpp"

#include <cctype>
#include <cmath>

#include "ured/errors.hpp"

namespace ured {

namespace {

bool parse_integer(std::string_view text, bigint* out) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) return false;
  bigint value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
    value = value * 10 + (text[pos] - '0');
  }
  *out = negative ? -value : value;
  return true;
}

}  // namespace

rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    return input_error("malformed rational: '" + std::string(text) + "'");
  };
  const std::size_t slash = text.find('/');
  bigint num;
  bigint den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, &num)) throw bad();
  } else {
    if (!parse_integer(text.substr(0, slash), &num)) throw bad();
    if (!parse_integer(text.substr(slash + 1), &den)) throw bad();
    if (den == 0) throw input_error("zero denominator in rational: '" + std::string(text) + "'");
  }
  return rational(num) / rational(den);
}

std::string rational_to_string(const rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

double rational_to_double(const rational& value) { return value.convert_to<double>(); }

rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw input_error("non-finite number where a rational is required");
  if (value == 0.0) return rational(0);
  int exp = 0;
  // Mantissa of a finite double fits in 53 bits, so this is exact.
  const double mant = std::frexp(value, &exp);
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  rational result(scaled);
  if (exp >= 0) {
    result *= rational(bigint(1) << exp);
  } else {
    result /= rational(bigint(1) << -exp);
  }
  return result;
}

rational rational_abs(const rational& value) { return value < 0 ? rational(-value) : value; }

}  // namespace ured
