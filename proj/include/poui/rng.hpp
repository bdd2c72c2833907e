#ifndef POUI_RNG_HPP
#define POUI_RNG_HPP

#include <cstdint>
#include <random>

namespace poui {

/// splitmix64 step; used to decorrelate stream seeds and to derive
/// per-scenario seeds for sweeps.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// One deterministic substream of a simulation's randomness.  Streams with
/// distinct ids are independent: draws on one never shift another, so e.g.
/// changing the population-noise parameter cannot perturb job-quality draws.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream_id)
        : engine_(mix64(mix64(seed) ^ mix64(stream_id ^ 0xa02bdbf7bb3c0a7ULL))) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// Uniform integer in [0, n).  n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        // Lemire's unbiased bounded sampling.
        std::uint64_t x = engine_();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            std::uint64_t threshold = -n % n;
            while (lo < threshold) {
                x = engine_();
                m = static_cast<__uint128_t>(x) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::mt19937_64 engine_;
};

/// Named substreams of one simulation run.
struct RngStreams {
    static constexpr std::uint64_t kSkill = 1;
    static constexpr std::uint64_t kQuality = 2;
    static constexpr std::uint64_t kSelection = 3;
    static constexpr std::uint64_t kObservation = 4;
    static constexpr std::uint64_t kPopulation = 5;

    explicit RngStreams(std::uint64_t seed)
        : skill(seed, kSkill),
          quality(seed, kQuality),
          selection(seed, kSelection),
          observation(seed, kObservation),
          population(seed, kPopulation) {}

    Rng skill;
    Rng quality;
    Rng selection;
    Rng observation;
    Rng population;
};

}  // namespace poui

#endif
