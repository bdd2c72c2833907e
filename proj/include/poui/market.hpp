#ifndef POUI_MARKET_HPP
#define POUI_MARKET_HPP

#include <deque>
#include <optional>
#include <unordered_map>
#include <vector>

#include "poui/coin.hpp"
#include "poui/rng.hpp"
#include "poui/staking.hpp"
#include "poui/types.hpp"

namespace poui {

enum class JobStatus : std::uint8_t {
    Posted,
    Accepted,
    Completed,
    Validated,
    Rejected,
    Expired,
    Settled,
};

const char* job_status_name(JobStatus s);

struct JobRecord {
    JobId job_id = 0;
    JobSpec spec;
    NodeId poster;
    NodeId coordinator;
    std::optional<NodeId> worker;
    JobStatus status = JobStatus::Posted;
    Step posted_at = 0;
    std::optional<Step> accepted_at;
    std::optional<Step> completed_at;
    CoinAmount escrow;
    std::optional<double> latent_quality;
};

struct Payouts {
    CoinAmount worker;       // credited to the worker on Validated
    CoinAmount coordinator;  // coordination fee on Validated
    CoinAmount refund;       // returned to the funding source on Rejected
};

/// The decentralized job market collapsed to its synchronized fixpoint: one
/// logical FIFO queue, coordinators assigned round-robin per job for fee
/// accounting.  All coin movements go through the shared StakeLedger; the
/// subsidy pool lives here and grows only through explicit mint() calls.
class JobMarket {
public:
    struct Config {
        double coordinator_fee = 0.1;
        double reputation_threshold = 0.3;
        double worker_quality_noise = 0.1;
    };

    JobMarket(Config config, std::vector<NodeId> coordinators);

    /// Screens the poster's reputation against the threshold.  On success a
    /// Posted record joins the queue and its id is returned; otherwise the
    /// rejection is logged against the poster (ScreeningRejection reputation
    /// event) and nullopt is returned.
    std::optional<JobId> post_job(const JobSpec& spec, NodeId poster, Step now,
                                  StakeLedger& ledger);

    /// Funds the escrow (poster balance for Private, subsidy pool for
    /// PublicGood) and hands the job to the worker.
    const JobRecord& accept_job(JobId id, NodeId worker, Step now, StakeLedger& ledger);

    /// Marks an Accepted job Completed once its runtime has elapsed and
    /// draws its latent quality: clamp(worker_skill + U(-noise, +noise), 0, 1).
    const JobRecord& complete_job(JobId id, Step now, double worker_skill, Rng& quality_rng);

    /// Expires every Posted job whose validity window has closed (boundary
    /// inclusive) and returns the expired ids.
    std::vector<JobId> expire_jobs(Step now);

    /// Releases the escrow per the verdict: Validated pays worker and
    /// coordinator (exact fee split), Rejected refunds the funding source.
    Payouts settle_escrow(JobId id, Verdict verdict, StakeLedger& ledger);

    const JobRecord& job(JobId id) const;
    bool has_job(JobId id) const { return jobs_.contains(id); }

    /// Posted jobs in FIFO order (posted_at, then job_id).
    const std::deque<JobId>& queue() const { return queue_; }
    std::size_t pending_jobs() const { return queue_.size(); }

    CoinAmount subsidy_pool() const { return subsidy_pool_; }
    CoinAmount total_minted() const { return total_minted_; }
    /// Injects freshly minted coins into the subsidy pool (logged).
    void mint_subsidy(CoinAmount amount);
    std::size_t mint_events() const { return mint_events_; }

    /// Sum of escrows currently held by live (Accepted/Completed) jobs.
    CoinAmount live_escrow() const { return live_escrow_; }

    std::uint64_t screening_rejections() const { return screening_rejections_; }

private:
    JobRecord& job_mut(JobId id);
    /// Every status mutation funnels through here; transitions outside the
    /// legal edge set throw WrongStatus.
    void transition(JobRecord& job, JobStatus to);
    void remove_from_queue(JobId id);

    Config config_;
    std::vector<NodeId> coordinators_;
    std::size_t next_coordinator_ = 0;
    JobId next_job_id_ = 1;
    std::unordered_map<JobId, JobRecord> jobs_;
    std::deque<JobId> queue_;
    CoinAmount subsidy_pool_;
    CoinAmount live_escrow_;
    CoinAmount total_minted_;
    std::size_t mint_events_ = 0;
    std::uint64_t screening_rejections_ = 0;
};

}  // namespace poui

#endif
