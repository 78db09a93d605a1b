#pragma once

#include <cstdlib>
#include <string>

namespace drg {

inline constexpr int kDefaultPrecisionBits = 40;

/// Isolating-interval width exponent: intervals are refined to 2^-bits.
/// DRG_PRECISION_BITS overrides the default; values are clamped to [8, 200].
inline int precision_bits() {
  static const int bits = [] {
    const char* env = std::getenv("DRG_PRECISION_BITS");
    if (!env || !*env) return kDefaultPrecisionBits;
    try {
      int v = std::stoi(env);
      return v < 8 ? 8 : (v > 200 ? 200 : v);
    } catch (const std::exception&) {
      return kDefaultPrecisionBits;
    }
  }();
  return bits;
}

}  // namespace drg
