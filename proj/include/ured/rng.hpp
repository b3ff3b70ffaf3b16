#pragma once

#include <cstdint>
#include <string_view>

namespace ured {

/// splitmix64 finalizer; full-avalanche 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

constexpr std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (const char c : text) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ull;
  }
  return hash;
}

/// Counter-based splittable generator. Output k of stream `key` is
/// mix64(key + GOLDEN*k), so streams can be derived by label without
/// consuming state from their parent: adding a new operation never perturbs
/// the draws of existing ones.
class rng {
 public:
  rng() = default;

  static rng from_seed(std::uint64_t seed) {
    return rng(mix64(seed ^ 0x5bf0363529f4b3c9ull));
  }

  /// Child stream addressed by label; independent of this stream's counter.
  [[nodiscard]] rng derive(std::string_view label) const {
    return rng(mix64(key_ ^ (fnv1a64(label) + 0x9e3779b97f4a7c15ull)));
  }

  [[nodiscard]] rng derive(std::uint64_t index) const {
    return rng(mix64(key_ ^ (mix64(index + 0x165667b19e3779f9ull))));
  }

  std::uint64_t next_u64() { return mix64(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

  /// Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [lo, hi], inclusive. Modulo bias is irrelevant at
  /// the ranges used here; determinism is the contract.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

  bool next_bool() { return (next_u64() & 1u) != 0; }

 private:
  explicit rng(std::uint64_t key) : key_(key) {}

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace ured
