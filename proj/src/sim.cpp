#include "poui/sim.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "poui/energy.hpp"
#include "poui/errors.hpp"
#include "poui/reward.hpp"

namespace poui {

namespace {

constexpr std::size_t kCoordinatorCount = 3;
constexpr std::size_t kPosterCount = 5;
constexpr std::int64_t kGenesisStakeCoins = 10;  // bootstrap validator eligibility

std::string format_g6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

JobType cycle_job_type(std::uint64_t n) {
    switch (n % 3) {
    case 0: return JobType::TextGeneration;
    case 1: return JobType::ImageAnalysis;
    default: return JobType::DataVerification;
    }
}

}  // namespace

std::string trace_to_csv(const SimTrace& trace) {
    std::string out =
        "step,reward,workers,target_workers,pending_jobs,completed_this_step,"
        "expired_this_step,validated_this_step,rejected_this_step,total_energy_kwh,"
        "mean_reputation,subsidy_pool\n";
    for (const TraceRow& row : trace) {
        out += std::to_string(row.step);
        out += ',';
        out += format_g6(row.reward);
        out += ',';
        out += std::to_string(row.workers);
        out += ',';
        out += std::to_string(row.target_workers);
        out += ',';
        out += std::to_string(row.pending_jobs);
        out += ',';
        out += std::to_string(row.completed_this_step);
        out += ',';
        out += std::to_string(row.expired_this_step);
        out += ',';
        out += std::to_string(row.validated_this_step);
        out += ',';
        out += std::to_string(row.rejected_this_step);
        out += ',';
        out += format_g6(row.total_energy_kwh);
        out += ',';
        out += format_g6(row.mean_reputation);
        out += ',';
        out += row.subsidy_pool.str();
        out += '\n';
    }
    return out;
}

Simulation::Simulation(const SimParams& params)
    : params_(params),
      market_(JobMarket::Config{params.coordinator_fee, params.reputation_threshold, 0.1},
              [&] {
                  std::vector<NodeId> ids;
                  for (std::size_t i = 0; i < kCoordinatorCount; ++i)
                      ids.push_back(NodeId{static_cast<std::uint64_t>(i) + 1});
                  return ids;
              }()),
      rng_(params.seed),
      reward_(params.initial_reward.to_real()) {
    next_node_id_ = 1;
    for (std::size_t i = 0; i < kCoordinatorCount; ++i) {
        NodeId id = allocate_node_id();
        ledger_.create_node(id, Role::MarketCoordinator, CoinAmount{}, 1.0);
    }
    for (std::size_t i = 0; i < kPosterCount; ++i) {
        NodeId id = allocate_node_id();
        ledger_.create_node(id, Role::JobPoster, CoinAmount{}, 1.0);
        posters_.push_back(id);
    }
    // Genesis workers carry a small stake so validation panels can form
    // from step one; later hires earn their way into the validator pool.
    for (std::int64_t i = 0; i < params_.initial_workers; ++i)
        add_worker(CoinAmount::from_coins(kGenesisStakeCoins));
    genesis_supply_ = ledger_.total_coins();
}

void Simulation::add_worker(CoinAmount genesis_stake) {
    NodeId id = allocate_node_id();
    double skill = rng_.skill.uniform(0.5, 1.0);
    ledger_.create_node(id, Role::Worker, genesis_stake, 1.0);
    if (!genesis_stake.is_zero()) {
        ledger_.stake(id, genesis_stake);
        ledger_.grant_role(id, Role::Validator);
    }
    workers_.push_back(WorkerNode{id, skill, true});
    std::size_t index = workers_.size() - 1;
    worker_index_.emplace(id.value, index);
    active_.push_back(index);
}

void Simulation::retire_last_worker() {
    if (active_.empty()) return;
    workers_[active_.back()].active = false;
    active_.pop_back();
}

std::int64_t Simulation::conservation_delta_micro() const {
    CoinAmount circulating =
        ledger_.total_coins() + market_.live_escrow() + market_.subsidy_pool();
    CoinAmount injected = genesis_supply_ + market_.total_minted();
    return circulating.micro() - injected.micro();
}

TraceRow Simulation::step() {
    try {
        return step_impl();
    } catch (const SimError& e) {
        throw SimError(e.code(), "step " + std::to_string(now_) + ": " + e.what());
    }
}

TraceRow Simulation::step_impl() {
    TraceRow row;
    row.step = now_;
    row.target_workers = params_.target_workers;

    // (1) job arrivals
    CoinAmount posted_reward = CoinAmount::from_real(reward_);
    for (std::int64_t j = 0; j < params_.job_arrival_per_step; ++j) {
        JobSpec spec;
        spec.job_type = cycle_job_type(arrival_counter_);
        spec.validity_period = params_.job_validity_period;
        spec.runtime_requirement = 1;  // normalized jobs: one worker, one step
        spec.visibility = Visibility::PublicGood;
        spec.offered_reward = posted_reward;
        NodeId poster = posters_[arrival_counter_ % posters_.size()];
        ++arrival_counter_;
        market_.post_job(spec, poster, now_, ledger_);
    }

    // (2) expiry
    row.expired_this_step = static_cast<std::int64_t>(market_.expire_jobs(now_).size());

    // (3) acceptance: workers in id order each take the oldest posted job
    for (std::size_t index : active_) {
        if (market_.queue().empty()) break;
        JobId front = market_.queue().front();
        const JobRecord& posted = market_.job(front);
        if (posted.spec.visibility == Visibility::PublicGood &&
            posted.spec.offered_reward > market_.subsidy_pool()) {
            market_.mint_subsidy(posted.spec.offered_reward - market_.subsidy_pool());
        }
        market_.accept_job(front, workers_[index].id, now_, ledger_);
        in_flight_.push_back(front);
    }

    // (4) completion of due jobs
    std::vector<JobId> completed;
    std::vector<JobId> still_running;
    for (JobId id : in_flight_) {
        const JobRecord& job = market_.job(id);
        if (now_ >= *job.accepted_at + job.spec.runtime_requirement) {
            const WorkerNode& worker = workers_[worker_index_.at(job.worker->value)];
            market_.complete_job(id, now_, worker.skill, rng_.quality);
            completed.push_back(id);
        } else {
            still_running.push_back(id);
        }
    }
    in_flight_ = std::move(still_running);
    row.completed_this_step = static_cast<std::int64_t>(completed.size());

    // (5) validation: stakes are frozen until settlement, so one pool
    // snapshot serves every panel this step
    std::vector<ValidationOutcome> outcomes;
    if (!completed.empty()) {
        ValidatorPool pool = ValidatorPool::build(ledger_, params_.stake_cap,
                                                  params_.reputation_threshold);
        outcomes.reserve(completed.size());
        for (JobId id : completed) {
            const JobRecord& job = market_.job(id);
            std::vector<NodeId> panel =
                pool.sample(params_.validators_per_task, *job.worker,
                            params_.uniform_blend, rng_.selection);
            ValidationOutcome outcome =
                validate_output(id, *job.worker, *job.latent_quality, panel,
                                params_.quality_threshold, params_.validator_noise,
                                rng_.observation);
            if (outcome_observer_) outcome_observer_(job, outcome);
            outcomes.push_back(std::move(outcome));
        }
    }

    // (6) settlement and reputation
    for (const ValidationOutcome& outcome : outcomes) {
        const JobRecord& job = market_.job(outcome.job_id);
        NodeId worker = *job.worker;
        Payouts payouts = market_.settle_escrow(outcome.job_id, outcome.verdict, ledger_);
        if (outcome.verdict == Verdict::Validated) {
            ledger_.update_reputation(worker, ReputationEvent::ValidatedWork);
            ledger_.stake(worker, payouts.worker);  // earnings qualify future validation
            ledger_.grant_role(worker, Role::Validator);
            ++row.validated_this_step;
        } else {
            ledger_.update_reputation(worker, ReputationEvent::RejectedWork);
            ++row.rejected_this_step;
        }
    }

    // (7) reward update
    std::int64_t w = active_workers();
    if (w == 0) {
        ++zero_worker_events_;
        w = 1;  // degenerate state: substitute so the update stays defined
    }
    double reward_next =
        next_reward(RewardState{reward_, params_.alpha, params_.delta}, w,
                    params_.target_workers);

    // (8) population response
    WorkerPopulation pop{w, params_.target_workers, params_.beta, params_.gamma,
                         params_.worker_cap};
    std::int64_t w_next = next_worker_count(pop, reward_, reward_next, rng_.population);
    reward_ = reward_next;
    while (active_workers() < w_next) add_worker();
    while (active_workers() > w_next) retire_last_worker();

    // (9) energy accrual: active workers burn useful-work energy, eligible
    // validators burn security energy
    std::int64_t validators = 0;
    ledger_.for_each([&](NodeId, const StakeLedger::Account& acct) {
        if (!acct.staked.is_zero() && acct.reputation >= params_.reputation_threshold)
            ++validators;
    });
    energy_kwh_ += (static_cast<double>(active_workers()) * kDefaultUsefulKwh +
                    static_cast<double>(validators) * kDefaultValidatorWatts / 1000.0) /
                   params_.steps_per_hour;

    // (10) trace row
    row.reward = reward_;
    row.workers = active_workers();
    row.pending_jobs = static_cast<std::int64_t>(market_.pending_jobs());
    row.total_energy_kwh = energy_kwh_;
    if (!active_.empty()) {
        double sum = 0.0;
        for (std::size_t index : active_) sum += ledger_.reputation(workers_[index].id);
        row.mean_reputation = sum / static_cast<double>(active_.size());
    }
    row.subsidy_pool = market_.subsidy_pool();

    if (conservation_delta_micro() != 0)
        throw std::logic_error("coin conservation violated at step " +
                               std::to_string(now_) + " (delta " +
                               std::to_string(conservation_delta_micro()) + " micro)");

    ++now_;
    return row;
}

SimTrace Simulation::run() {
    SimTrace trace;
    trace.reserve(static_cast<std::size_t>(params_.steps));
    for (std::int64_t i = 0; i < params_.steps; ++i) trace.push_back(step());
    return trace;
}

SimTrace run_simulation(const SimParams& params) {
    return Simulation(params).run();
}

std::uint64_t derive_sweep_seed(std::uint64_t base_seed, std::size_t index) {
    return mix64(base_seed ^ mix64(static_cast<std::uint64_t>(index) + 1));
}

std::vector<SweepPoint> sweep(const SimParams& base, const std::string& param_name,
                              const std::vector<double>& values) {
    std::vector<SweepPoint> points;
    points.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        SimParams params = base;
        if (param_name == "alpha") params.alpha = values[i];
        else if (param_name == "delta") params.delta = values[i];
        else if (param_name == "beta") params.beta = values[i];
        else if (param_name == "gamma") params.gamma = values[i];
        else
            throw SimError(Errc::ConfigError,
                           "sweep parameter must be one of alpha, delta, beta, gamma; got '" +
                               param_name + "'");
        params = validate_params(params);
        params.seed = derive_sweep_seed(base.seed, i);
        SimTrace trace = run_simulation(params);

        SweepPoint point;
        point.value = values[i];
        std::size_t lo = trace.size() > 100 ? 100 : 0;
        std::size_t n = trace.size() - lo;
        if (n > 0) {
            double dev_sum = 0.0;
            double reward_sum = 0.0;
            for (std::size_t r = lo; r < trace.size(); ++r) {
                dev_sum += std::abs(static_cast<double>(trace[r].workers - params.target_workers));
                reward_sum += trace[r].reward;
            }
            double reward_mean = reward_sum / static_cast<double>(n);
            double var = 0.0;
            for (std::size_t r = lo; r < trace.size(); ++r) {
                double d = trace[r].reward - reward_mean;
                var += d * d;
            }
            point.mean_abs_worker_dev = dev_sum / static_cast<double>(n);
            point.reward_std_dev = std::sqrt(var / static_cast<double>(n));
        }
        points.push_back(point);
    }
    return points;
}

std::string sweep_to_csv(const std::string& param_name, const std::vector<SweepPoint>& points) {
    std::string out = "param,value,mean_abs_worker_deviation,reward_std_dev\n";
    for (const SweepPoint& p : points) {
        out += param_name;
        out += ',';
        out += format_g6(p.value);
        out += ',';
        out += format_g6(p.mean_abs_worker_dev);
        out += ',';
        out += format_g6(p.reward_std_dev);
        out += '\n';
    }
    return out;
}

}  // namespace poui
