#ifndef POUI_TYPES_HPP
#define POUI_TYPES_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "poui/coin.hpp"

namespace poui {

/// Opaque node identifier, unique within one simulation run.
struct NodeId {
    std::uint64_t value = 0;
    auto operator<=>(const NodeId&) const = default;
};

using JobId = std::uint64_t;
using Step = std::int64_t;

/// Functional-node roles.  A node may hold several at once.
enum class Role : std::uint8_t {
    JobPoster = 1u << 0,
    MarketCoordinator = 1u << 1,
    Worker = 1u << 2,
    Validator = 1u << 3,
};

constexpr Role operator|(Role a, Role b) {
    return static_cast<Role>(static_cast<std::uint8_t>(a) | static_cast<std::uint8_t>(b));
}

constexpr bool has_role(Role set, Role wanted) {
    return (static_cast<std::uint8_t>(set) & static_cast<std::uint8_t>(wanted)) != 0;
}

enum class JobType : std::uint8_t {
    TextGeneration,
    ImageAnalysis,
    DataVerification,
    Other,
};

enum class Visibility : std::uint8_t {
    Private,     // poster pays the reward
    PublicGood,  // reward drawn from the network subsidy pool
};

struct JobSpec {
    JobType job_type = JobType::Other;
    std::string description;
    Step validity_period = 1;     // steps the posting stays open
    Step runtime_requirement = 1; // steps of work after acceptance
    Visibility visibility = Visibility::Private;
    CoinAmount offered_reward;
};

/// Throws RangeViolation if the spec breaks a structural constraint
/// (validity/runtime >= 1, Private jobs must offer a positive reward).
void validate_spec(const JobSpec& spec);

/// Full parameter set for one simulation run.  Construct, adjust, then pass
/// through validate_params() before use; worker_cap = 0 and
/// job_arrival_per_step = -1 mean "derive from target_workers".
struct SimParams {
    std::int64_t target_workers = 250;
    std::int64_t initial_workers = 100;
    CoinAmount initial_reward = CoinAmount::from_coins(100);
    double alpha = 0.2;
    double delta = 0.05;
    double beta = 1.0;
    double gamma = 0.05;
    std::int64_t steps = 200;
    std::uint64_t seed = 1;
    std::int64_t worker_cap = 0;            // 0 = auto (10 * target_workers)
    std::int64_t job_arrival_per_step = -1; // -1 = auto (target_workers)
    double coordinator_fee = 0.1;
    CoinAmount stake_cap = CoinAmount::from_coins(1000);
    double uniform_blend = 0.2;
    std::int64_t validators_per_task = 3;
    double quality_threshold = 0.5;
    double reputation_threshold = 0.3;
    // auxiliary knobs
    double validator_noise = 0.05;  // half-width of validator observation noise
    double steps_per_hour = 1.0;    // maps simulation steps to wall-clock hours
    Step job_validity_period = 5;   // validity of jobs generated by the harness
};

/// Checks every range constraint and resolves the auto fields.  Throws
/// RangeViolation naming the first violated field, or EvenValidatorCount
/// when validators_per_task is even.
SimParams validate_params(const SimParams& raw);

/// Loads `key = value` lines (UTF-8, '#' comments) into a SimParams and
/// validates it.  Unknown or duplicate keys are ConfigError.
SimParams load_params(const std::string& path);

/// Same, but from an in-memory config text (used by tests).
SimParams parse_params(const std::string& text);

}  // namespace poui

template <>
struct std::hash<poui::NodeId> {
    std::size_t operator()(const poui::NodeId& id) const noexcept {
        return std::hash<std::uint64_t>{}(id.value);
    }
};

#endif
