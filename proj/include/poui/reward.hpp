#ifndef POUI_REWARD_HPP
#define POUI_REWARD_HPP

#include <cstdint>

#include "poui/rng.hpp"

namespace poui {

/// Lower bound on the per-job reward; keeps the multiplicative update from
/// collapsing to zero under sustained worker oversupply.
inline constexpr double kRewardFloor = 1e-6;

struct RewardState {
    double reward = 100.0;  // current per-job reward in coin units
    double alpha = 0.2;     // sensitivity to worker disparity
    double delta = 0.05;    // dead-band threshold on relative disparity
};

struct WorkerPopulation {
    std::int64_t workers = 0;
    std::int64_t target = 0;
    double beta = 1.0;   // sensitivity to reward variations
    double gamma = 0.0;  // noise half-width, relative to the candidate count
    std::int64_t cap = 0;
};

/// |target - workers| / workers.  Throws ZeroWorkers when workers == 0.
double relative_disparity(std::int64_t workers, std::int64_t target);

/// Dead-banded multiplicative reward update: if the relative disparity is at
/// least state.delta, returns state.reward * (1 + alpha * (target - w) / w),
/// floored at kRewardFloor; otherwise returns state.reward bit-identically.
double next_reward(const RewardState& state, std::int64_t workers, std::int64_t target);

/// Worker-population response to a reward change: candidate
/// c = w * beta * (1 + (r_next - r_prev) / r_prev), plus noise drawn
/// uniformly from [-gamma*c, +gamma*c], rounded half-to-even and clamped to
/// [0, cap].  Always consumes exactly one draw from rng.
std::int64_t next_worker_count(const WorkerPopulation& pop, double reward_prev,
                               double reward_next, Rng& rng);

}  // namespace poui

#endif
