#ifndef POUI_SIM_HPP
#define POUI_SIM_HPP

#include <functional>
#include <string>
#include <vector>

#include "poui/market.hpp"
#include "poui/rng.hpp"
#include "poui/staking.hpp"
#include "poui/types.hpp"

namespace poui {

struct TraceRow {
    Step step = 0;
    double reward = 0.0;
    std::int64_t workers = 0;
    std::int64_t target_workers = 0;
    std::int64_t pending_jobs = 0;
    std::int64_t completed_this_step = 0;
    std::int64_t expired_this_step = 0;
    std::int64_t validated_this_step = 0;
    std::int64_t rejected_this_step = 0;
    double total_energy_kwh = 0.0;  // cumulative over the run
    double mean_reputation = 0.0;   // over active workers
    CoinAmount subsidy_pool;
};

using SimTrace = std::vector<TraceRow>;

/// Renders the trace as CSV: header with the exact column names, comma
/// separator, reals with 6 significant digits, coins with 6 fractional
/// digits, LF line endings.
std::string trace_to_csv(const SimTrace& trace);

/// Deterministic discrete-time loop coupling the job market, staking
/// consensus, reward controller and energy accounting.  One instance owns
/// one run; identical (seed, params) give bit-identical traces.
class Simulation {
public:
    explicit Simulation(const SimParams& params);

    /// Executes one step in the fixed phase order (arrivals, expiry,
    /// acceptance, completion, validation, settlement, reward update,
    /// population update, energy accrual) and returns the trace row.
    TraceRow step();

    /// Folds step() over params.steps iterations.
    SimTrace run();

    const StakeLedger& ledger() const { return ledger_; }
    const JobMarket& market() const { return market_; }
    std::int64_t active_workers() const { return static_cast<std::int64_t>(active_.size()); }
    double reward() const { return reward_; }
    Step now() const { return now_; }
    std::uint64_t zero_worker_events() const { return zero_worker_events_; }

    /// Signed mismatch, in micro-coins, between circulating supply
    /// (balances + staked + live escrow + subsidy pool) and the injected
    /// supply (genesis + minted).  Zero iff coins are conserved.
    std::int64_t conservation_delta_micro() const;

    /// Invoked for every validation outcome; used by audits.
    void set_outcome_observer(std::function<void(const JobRecord&, const ValidationOutcome&)> fn) {
        outcome_observer_ = std::move(fn);
    }

private:
    struct WorkerNode {
        NodeId id;
        double skill;
        bool active = true;
    };

    void add_worker(CoinAmount genesis_stake = CoinAmount{});
    void retire_last_worker();
    TraceRow step_impl();
    NodeId allocate_node_id() { return NodeId{next_node_id_++}; }

    SimParams params_;
    StakeLedger ledger_;
    JobMarket market_;
    RngStreams rng_;
    std::vector<NodeId> posters_;
    std::vector<WorkerNode> workers_;           // all workers ever hired
    std::vector<std::size_t> active_;           // indices into workers_, id-ascending
    std::unordered_map<std::uint64_t, std::size_t> worker_index_;  // node id -> index
    std::vector<JobId> in_flight_;              // Accepted jobs awaiting completion
    double reward_;
    Step now_ = 0;
    std::uint64_t next_node_id_ = 1;
    std::uint64_t arrival_counter_ = 0;
    double energy_kwh_ = 0.0;
    CoinAmount genesis_supply_;
    std::uint64_t zero_worker_events_ = 0;
    std::function<void(const JobRecord&, const ValidationOutcome&)> outcome_observer_;
};

/// Validates nothing itself: params must already be validated.
SimTrace run_simulation(const SimParams& params);

struct SweepPoint {
    double value = 0.0;
    double mean_abs_worker_dev = 0.0;  // mean |w - target| over the late window
    double reward_std_dev = 0.0;       // reward standard deviation, same window
};

/// Derives the per-scenario seed for sweep index i from the base seed.
std::uint64_t derive_sweep_seed(std::uint64_t base_seed, std::size_t index);

/// Runs one independent simulation per value of the named parameter
/// (alpha, delta, beta or gamma), each with a seed derived from the base
/// seed and the value index.  Results preserve input order.
std::vector<SweepPoint> sweep(const SimParams& base, const std::string& param_name,
                              const std::vector<double>& values);

std::string sweep_to_csv(const std::string& param_name, const std::vector<SweepPoint>& points);

}  // namespace poui

#endif
