#pragma once

#include <stdexcept>
#include <string>

namespace ured {

/// Malformed user input: bad JSON, schema violations, out-of-range
/// parameters. The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A violated invariant: something that should be a theorem failed to check
/// out. The CLI maps this to exit code 1.
class invariant_error : public std::logic_error {
 public:
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ured
