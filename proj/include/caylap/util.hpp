#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace caylap {

/// Deterministic integer stream used for witness search and random weights.
///
/// std::mt19937_64 produces a bit-exact sequence on every platform; the
/// range mapping below is written out explicitly because the standard
/// library's uniform_int_distribution is implementation-defined and would
/// break byte-identical reports across toolchains.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Integer in [lo, hi] via modulo mapping (the tiny bias is irrelevant
  /// for witness sampling; determinism is what matters).
  long next_int(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(eng_() % span);
  }

 private:
  std::mt19937_64 eng_;
};

/// FNV-1a — stable across runs/platforms; derives per-condition RNG streams.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace caylap
