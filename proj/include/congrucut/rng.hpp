#pragma once

#include <cstdint>

namespace congrucut {

// SplitMix64 stream. Deterministic across platforms, cheap to fork into
// independent substreams (one per sweep cell / optimizer start).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    bool flip() { return (next_u64() & 1) != 0; }

    // fork a decorrelated substream keyed by an index
    static Rng fork(std::uint64_t seed, std::uint64_t key) {
        Rng mixer(seed ^ (0x9e3779b97f4a7c15ULL * (key + 1)));
        return Rng(mixer.next_u64());
    }

  private:
    std::uint64_t state_;
};

}  // namespace congrucut
