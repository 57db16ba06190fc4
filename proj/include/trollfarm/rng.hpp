#pragma once

#include <cstdint>

namespace trollfarm {

// splitmix64 step (Steele, Lea & Flood's SplittableRandom output function).
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// One substream per (seed, stream_index) pair. Streams are derived purely
// from the pair, so sharded and serial runs consume identical draws for a
// given voter index regardless of execution order.
class SubstreamRng {
  public:
    SubstreamRng(std::uint64_t seed, std::uint64_t stream_index) {
        state_ = seed ^ (stream_index * 0x9e3779b97f4a7c15ULL +
                         0x2545f4914f6cdd1dULL);
        // two warm-up outputs decorrelate neighbouring stream indices
        splitmix64(state_);
        splitmix64(state_);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    // uniform double in [0, 1), 53-bit resolution
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

  private:
    std::uint64_t state_;
};

}  // namespace trollfarm
