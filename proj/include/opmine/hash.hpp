#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace opmine {

// FNV-1a, 64-bit. Used for config hashes and vocabulary checksums.
inline std::uint64_t fnv1a64(std::string_view bytes,
                             std::uint64_t state = 0xcbf29ce484222325ULL) {
  for (unsigned char c : bytes) {
    state ^= c;
    state *= 0x100000001b3ULL;
  }
  return state;
}

inline std::string to_hex64(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

}  // namespace opmine
