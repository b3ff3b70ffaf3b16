#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ured/rng.hpp"

namespace ured {

/// 16-hex-digit FNV-1a digest used to tag report inputs. Not cryptographic;
/// only a stable fingerprint for reproducibility checks.
inline std::string digest_hex(std::string_view bytes) {
  const std::uint64_t h = fnv1a64(bytes);
  static const char* kHex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 0; i < 16; ++i) out[15 - i] = kHex[(h >> (4 * i)) & 0xf];
  return out;
}

}  // namespace ured
