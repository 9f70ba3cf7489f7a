#ifndef NOVB_RNG_HPP
#define NOVB_RNG_HPP

#include <cstdint>

namespace novb {

// SplitMix64.  All randomness in the library flows through this generator so
// that a job seed reproduces byte-identical output on any platform; the
// standard <random> distributions are unspecified across implementations.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), unbiased by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    // Uniform in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Derive an independent child stream (used to keep parallel loops
    // deterministic regardless of scheduling).
    SplitMix64 fork(std::uint64_t salt) {
        SplitMix64 mixer(state_ ^ (0xa0761d6478bd642fULL + salt));
        return SplitMix64(mixer.next());
    }

  private:
    std::uint64_t state_;
};

} // namespace novb

#endif
