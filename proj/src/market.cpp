#include "poui/market.hpp"

#include <algorithm>
#include <string>

#include "poui/errors.hpp"

namespace poui {

namespace {

std::string job_str(JobId id) { return "job " + std::to_string(id); }

}  // namespace

const char* job_status_name(JobStatus s) {
    switch (s) {
    case JobStatus::Posted: return "Posted";
    case JobStatus::Accepted: return "Accepted";
    case JobStatus::Completed: return "Completed";
    case JobStatus::Validated: return "Validated";
    case JobStatus::Rejected: return "Rejected";
    case JobStatus::Expired: return "Expired";
    case JobStatus::Settled: return "Settled";
    }
    return "?";
}

JobMarket::JobMarket(Config config, std::vector<NodeId> coordinators)
    : config_(config), coordinators_(std::move(coordinators)) {
    if (coordinators_.empty())
        throw SimError(Errc::RangeViolation, "market needs at least one coordinator");
}

void JobMarket::transition(JobRecord& job, JobStatus to) {
    bool legal = false;
    switch (job.status) {
    case JobStatus::Posted:
        legal = to == JobStatus::Accepted || to == JobStatus::Expired;
        break;
    case JobStatus::Accepted:
        legal = to == JobStatus::Completed;
        break;
    case JobStatus::Completed:
        legal = to == JobStatus::Validated || to == JobStatus::Rejected;
        break;
    case JobStatus::Validated:
        legal = to == JobStatus::Settled;
        break;
    case JobStatus::Rejected:
    case JobStatus::Expired:
    case JobStatus::Settled:
        legal = false;  // terminal
        break;
    }
    if (!legal)
        throw SimError(Errc::WrongStatus, job_str(job.job_id) + ": illegal transition " +
                                              job_status_name(job.status) + " -> " +
                                              job_status_name(to));
    job.status = to;
}

std::optional<JobId> JobMarket::post_job(const JobSpec& spec, NodeId poster, Step now,
                                         StakeLedger& ledger) {
    validate_spec(spec);
    double reputation = ledger.reputation(poster);
    if (reputation < config_.reputation_threshold) {
        ++screening_rejections_;
        ledger.update_reputation(poster, ReputationEvent::ScreeningRejection);
        return std::nullopt;
    }
    JobRecord record;
    record.job_id = next_job_id_++;
    record.spec = spec;
    record.poster = poster;
    record.coordinator = coordinators_[next_coordinator_];
    next_coordinator_ = (next_coordinator_ + 1) % coordinators_.size();
    record.posted_at = now;
    JobId id = record.job_id;
    jobs_.emplace(id, std::move(record));
    queue_.push_back(id);  // ids are assigned in post order, so FIFO holds
    return id;
}

const JobRecord& JobMarket::accept_job(JobId id, NodeId worker, Step now,
                                       StakeLedger& ledger) {
    JobRecord& job = job_mut(id);
    if (job.status != JobStatus::Posted ||
        now >= job.posted_at + job.spec.validity_period)
        throw SimError(Errc::JobNotAvailable,
                       job_str(id) + " status " + job_status_name(job.status) +
                           " at step " + std::to_string(now));
    if (!ledger.node_has_role(worker, Role::Worker))
        throw SimError(Errc::RoleViolation,
                       "node " + std::to_string(worker.value) + " lacks the worker role");

    CoinAmount reward = job.spec.offered_reward;
    if (job.spec.visibility == Visibility::Private) {
        if (reward > ledger.balance(job.poster))
            throw SimError(Errc::InsufficientPosterFunds,
                           job_str(id) + " needs " + reward.str() + ", poster has " +
                               ledger.balance(job.poster).str());
        ledger.debit(job.poster, reward);
    } else {
        if (reward > subsidy_pool_)
            throw SimError(Errc::SubsidyPoolExhausted,
                           job_str(id) + " needs " + reward.str() + ", pool has " +
                               subsidy_pool_.str());
        subsidy_pool_ -= reward;
    }
    job.escrow = reward;
    live_escrow_ += reward;
    job.worker = worker;
    job.accepted_at = now;
    transition(job, JobStatus::Accepted);
    remove_from_queue(id);
    return job;
}

const JobRecord& JobMarket::complete_job(JobId id, Step now, double worker_skill,
                                         Rng& quality_rng) {
    JobRecord& job = job_mut(id);
    if (job.status != JobStatus::Accepted)
        throw SimError(Errc::WrongStatus,
                       job_str(id) + " is " + job_status_name(job.status) + ", not Accepted");
    if (now < *job.accepted_at + job.spec.runtime_requirement)
        throw SimError(Errc::NotYetDue,
                       job_str(id) + " due at step " +
                           std::to_string(*job.accepted_at + job.spec.runtime_requirement));
    double noise = quality_rng.uniform(-config_.worker_quality_noise,
                                       config_.worker_quality_noise);
    job.latent_quality = std::clamp(worker_skill + noise, 0.0, 1.0);
    job.completed_at = now;
    transition(job, JobStatus::Completed);
    return job;
}

std::vector<JobId> JobMarket::expire_jobs(Step now) {
    std::vector<JobId> expired;
    for (JobId id : queue_) {
        JobRecord& job = jobs_.at(id);
        if (now >= job.posted_at + job.spec.validity_period) {
            transition(job, JobStatus::Expired);
            expired.push_back(id);
        }
    }
    std::erase_if(queue_, [&](JobId id) {
        return jobs_.at(id).status == JobStatus::Expired;
    });
    return expired;
}

Payouts JobMarket::settle_escrow(JobId id, Verdict verdict, StakeLedger& ledger) {
    JobRecord& job = job_mut(id);
    if (job.status != JobStatus::Completed)
        throw SimError(Errc::WrongStatus,
                       job_str(id) + " is " + job_status_name(job.status) + ", not Completed");

    Payouts payouts;
    CoinAmount escrow = job.escrow;
    live_escrow_ -= escrow;
    if (verdict == Verdict::Validated) {
        transition(job, JobStatus::Validated);
        payouts.coordinator = escrow.scaled(config_.coordinator_fee);
        payouts.worker = escrow - payouts.coordinator;  // split is exact
        ledger.credit(*job.worker, payouts.worker);
        ledger.credit(job.coordinator, payouts.coordinator);
        job.escrow = CoinAmount{};
        transition(job, JobStatus::Settled);
    } else {
        payouts.refund = escrow;
        if (job.spec.visibility == Visibility::Private)
            ledger.credit(job.poster, escrow);
        else
            subsidy_pool_ += escrow;
        job.escrow = CoinAmount{};
        transition(job, JobStatus::Rejected);
    }
    return payouts;
}

const JobRecord& JobMarket::job(JobId id) const {
    auto it = jobs_.find(id);
    if (it == jobs_.end()) throw SimError(Errc::JobNotAvailable, job_str(id) + " unknown");
    return it->second;
}

JobRecord& JobMarket::job_mut(JobId id) {
    auto it = jobs_.find(id);
    if (it == jobs_.end()) throw SimError(Errc::JobNotAvailable, job_str(id) + " unknown");
    return it->second;
}

void JobMarket::remove_from_queue(JobId id) {
    std::erase(queue_, id);
}

void JobMarket::mint_subsidy(CoinAmount amount) {
    subsidy_pool_ += amount;
    total_minted_ += amount;
    ++mint_events_;
}

}  // namespace poui
