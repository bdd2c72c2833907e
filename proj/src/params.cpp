#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

#include "poui/errors.hpp"
#include "poui/types.hpp"

namespace poui {

namespace {

[[noreturn]] void range_violation(const char* field, const std::string& value,
                                  const char* allowed) {
    throw SimError(Errc::RangeViolation,
                   std::string(field) + " = " + value + " (allowed: " + allowed + ")");
}

void check_int(const char* field, std::int64_t v, std::int64_t min, const char* allowed) {
    if (v < min) range_violation(field, std::to_string(v), allowed);
}

void check_real(const char* field, double v, bool ok, const char* allowed) {
    if (!ok || std::isnan(v)) range_violation(field, std::to_string(v), allowed);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view key, std::string_view v) {
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw SimError(Errc::ConfigError,
                       "key '" + std::string(key) + "': bad integer '" + std::string(v) + "'");
    return out;
}

std::uint64_t parse_u64(std::string_view key, std::string_view v) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw SimError(Errc::ConfigError,
                       "key '" + std::string(key) + "': bad unsigned integer '" + std::string(v) + "'");
    return out;
}

double parse_real(std::string_view key, std::string_view v) {
    std::string buf(v);
    char* end = nullptr;
    errno = 0;
    double out = std::strtod(buf.c_str(), &end);
    if (errno != 0 || end != buf.c_str() + buf.size() || buf.empty())
        throw SimError(Errc::ConfigError,
                       "key '" + std::string(key) + "': bad real '" + buf + "'");
    return out;
}

}  // namespace

void validate_spec(const JobSpec& spec) {
    if (spec.validity_period < 1)
        range_violation("validity_period", std::to_string(spec.validity_period), ">= 1");
    if (spec.runtime_requirement < 1)
        range_violation("runtime_requirement", std::to_string(spec.runtime_requirement), ">= 1");
    if (spec.visibility == Visibility::Private && spec.offered_reward.is_zero())
        range_violation("offered_reward", spec.offered_reward.str(), "> 0 for Private jobs");
}

SimParams validate_params(const SimParams& raw) {
    SimParams p = raw;
    check_int("target_workers", p.target_workers, 1, "> 0");
    check_int("initial_workers", p.initial_workers, 1, "> 0");
    if (p.initial_reward.is_zero())
        range_violation("initial_reward", p.initial_reward.str(), "> 0");
    check_real("alpha", p.alpha, p.alpha > 0.0, "> 0");
    check_real("delta", p.delta, p.delta >= 0.0, ">= 0");
    check_real("beta", p.beta, p.beta > 0.0, "> 0");
    check_real("gamma", p.gamma, p.gamma >= 0.0 && p.gamma < 1.0, "[0, 1)");
    // The trace for steps = 0 is defined (empty), so 0 is allowed here.
    check_int("steps", p.steps, 0, ">= 0");
    if (p.worker_cap == 0) p.worker_cap = 10 * p.target_workers;
    if (p.worker_cap < p.target_workers)
        range_violation("worker_cap", std::to_string(p.worker_cap), ">= target_workers");
    if (p.job_arrival_per_step < 0) p.job_arrival_per_step = p.target_workers;
    check_real("coordinator_fee", p.coordinator_fee,
               p.coordinator_fee >= 0.0 && p.coordinator_fee < 1.0, "[0, 1)");
    if (p.stake_cap.is_zero())
        range_violation("stake_cap", p.stake_cap.str(), "> 0");
    check_real("uniform_blend", p.uniform_blend,
               p.uniform_blend >= 0.0 && p.uniform_blend <= 1.0, "[0, 1]");
    check_int("validators_per_task", p.validators_per_task, 1, ">= 1");
    if (p.validators_per_task % 2 == 0)
        throw SimError(Errc::EvenValidatorCount,
                       "validators_per_task = " + std::to_string(p.validators_per_task) +
                           " (must be odd for tie-free majority)");
    check_real("quality_threshold", p.quality_threshold,
               p.quality_threshold >= 0.0 && p.quality_threshold <= 1.0, "[0, 1]");
    check_real("reputation_threshold", p.reputation_threshold,
               p.reputation_threshold >= 0.0 && p.reputation_threshold <= 1.0, "[0, 1]");
    check_real("validator_noise", p.validator_noise, p.validator_noise >= 0.0, ">= 0");
    check_real("steps_per_hour", p.steps_per_hour, p.steps_per_hour > 0.0, "> 0");
    check_int("job_validity_period", p.job_validity_period, 1, ">= 1");
    return p;
}

SimParams parse_params(const std::string& text) {
    SimParams p;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::string_view sv = trim(line);
        if (sv.empty()) continue;
        auto eq = sv.find('=');
        if (eq == std::string_view::npos)
            throw SimError(Errc::ConfigError,
                           "line " + std::to_string(lineno) + ": expected 'key = value'");
        std::string key(trim(sv.substr(0, eq)));
        std::string_view value = trim(sv.substr(eq + 1));
        if (!seen.insert(key).second)
            throw SimError(Errc::ConfigError, "duplicate key '" + key + "'");

        if (key == "target_workers") p.target_workers = parse_int(key, value);
        else if (key == "initial_workers") p.initial_workers = parse_int(key, value);
        else if (key == "initial_reward") p.initial_reward = CoinAmount::parse(value);
        else if (key == "alpha") p.alpha = parse_real(key, value);
        else if (key == "delta") p.delta = parse_real(key, value);
        else if (key == "beta") p.beta = parse_real(key, value);
        else if (key == "gamma") p.gamma = parse_real(key, value);
        else if (key == "steps") p.steps = parse_int(key, value);
        else if (key == "seed") p.seed = parse_u64(key, value);
        else if (key == "worker_cap") p.worker_cap = parse_int(key, value);
        else if (key == "job_arrival_per_step") p.job_arrival_per_step = parse_int(key, value);
        else if (key == "coordinator_fee") p.coordinator_fee = parse_real(key, value);
        else if (key == "stake_cap") p.stake_cap = CoinAmount::parse(value);
        else if (key == "uniform_blend") p.uniform_blend = parse_real(key, value);
        else if (key == "validators_per_task") p.validators_per_task = parse_int(key, value);
        else if (key == "quality_threshold") p.quality_threshold = parse_real(key, value);
        else if (key == "reputation_threshold") p.reputation_threshold = parse_real(key, value);
        else if (key == "validator_noise") p.validator_noise = parse_real(key, value);
        else if (key == "steps_per_hour") p.steps_per_hour = parse_real(key, value);
        else if (key == "job_validity_period") p.job_validity_period = parse_int(key, value);
        else throw SimError(Errc::ConfigError, "unknown key '" + key + "'");
    }
    return validate_params(p);
}

SimParams load_params(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SimError(Errc::ConfigError, "cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_params(buf.str());
}

}  // namespace poui
