#pragma once

#include "braidcong/braid.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace braidcong {

inline constexpr std::uint64_t kDefaultSeed = 0x5379'6d70'4272'6431ULL;

// Deterministic RNG wrapper.  Sampling avoids std::uniform_int_distribution on
// purpose: its output is implementation-defined, and seeded reports must be
// byte-stable across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  // Independent substream for a named batch of cases.
  Rng(std::uint64_t seed, std::string_view tag) : eng_(seed ^ fnv1a(tag)) {}

  std::uint64_t next() { return eng_(); }
  // Uniform-enough on [0, k): k is tiny compared to 2^64, so modulo bias is
  // irrelevant here and determinism is what matters.
  std::uint64_t below(std::uint64_t k) { return eng_() % k; }
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  // Random word on n strands with the given number of letters.
  BraidWord word(int n, int length) {
    BraidWord w{n, {}};
    w.letters.reserve(length);
    for (int t = 0; t < length; ++t) {
      int idx = 1 + static_cast<int>(below(static_cast<std::uint64_t>(n - 1)));
      w.letters.push_back(below(2) ? idx : -idx);
    }
    return w;
  }

private:
  static std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf2'9ce4'8422'2325ULL;
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x0000'0100'0000'01b3ULL;
    }
    return h;
  }

  std::mt19937_64 eng_;
};

}  // namespace braidcong
