#pragma once

#include <cstdint>

namespace ghz {

// splitmix64 (Steele, Lea, Flood 2014).  Fixed here as the project-wide
// generator so seeded runs reproduce bit-for-bit across platforms.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Modulo reduction; the bias is < bound / 2^64 and irrelevant at the
    // bounds used here, and keeps the draw count per sample fixed.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  private:
    std::uint64_t state_;
};

}  // namespace ghz
