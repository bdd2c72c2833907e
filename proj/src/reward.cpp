#include "poui/reward.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "poui/coin.hpp"
#include "poui/errors.hpp"

namespace poui {

double relative_disparity(std::int64_t workers, std::int64_t target) {
    if (workers == 0)
        throw SimError(Errc::ZeroWorkers, "disparity undefined at zero workers");
    return std::abs(static_cast<double>(target - workers)) / static_cast<double>(workers);
}

double next_reward(const RewardState& state, std::int64_t workers, std::int64_t target) {
    double disparity = relative_disparity(workers, target);
    if (disparity < state.delta) return state.reward;
    double signed_gap = static_cast<double>(target - workers) / static_cast<double>(workers);
    double updated = state.reward * (1.0 + state.alpha * signed_gap);
    return std::max(updated, kRewardFloor);
}

std::int64_t next_worker_count(const WorkerPopulation& pop, double reward_prev,
                               double reward_next, Rng& rng) {
    double relative_change = (reward_next - reward_prev) / reward_prev;
    double candidate = static_cast<double>(pop.workers) * pop.beta * (1.0 + relative_change);
    double half_width = pop.gamma * std::abs(candidate);
    double noise = rng.uniform(-half_width, half_width);
    std::int64_t rounded = round_half_even(candidate + noise);
    return std::clamp<std::int64_t>(rounded, 0, pop.cap);
}

}  // namespace poui
