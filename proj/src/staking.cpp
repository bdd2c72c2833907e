#include "poui/staking.hpp"

#include <algorithm>
#include <string>

#include "poui/errors.hpp"

namespace poui {

namespace {

std::string node_str(NodeId id) { return "node " + std::to_string(id.value); }

}  // namespace

void StakeLedger::create_node(NodeId id, Role roles, CoinAmount balance, double reputation) {
    auto [it, inserted] = accounts_.try_emplace(id);
    if (!inserted)
        throw SimError(Errc::UnknownNode, node_str(id) + " already exists");
    it->second.balance = balance;
    it->second.reputation = std::clamp(reputation, 0.0, 1.0);
    it->second.roles = roles;
}

const StakeLedger::Account& StakeLedger::account(NodeId id) const {
    auto it = accounts_.find(id);
    if (it == accounts_.end()) throw SimError(Errc::UnknownNode, node_str(id));
    return it->second;
}

StakeLedger::Account& StakeLedger::mutable_account(NodeId id) {
    auto it = accounts_.find(id);
    if (it == accounts_.end()) throw SimError(Errc::UnknownNode, node_str(id));
    return it->second;
}

void StakeLedger::grant_role(NodeId id, Role r) {
    auto& acct = mutable_account(id);
    acct.roles = acct.roles | r;
}

void StakeLedger::credit(NodeId id, CoinAmount amount) {
    mutable_account(id).balance += amount;
}

void StakeLedger::debit(NodeId id, CoinAmount amount) {
    auto& acct = mutable_account(id);
    if (amount > acct.balance)
        throw SimError(Errc::InsufficientFunds,
                       node_str(id) + " balance " + acct.balance.str() + " < " + amount.str());
    acct.balance -= amount;
}

void StakeLedger::stake(NodeId id, CoinAmount amount) {
    auto& acct = mutable_account(id);
    if (amount > acct.balance)
        throw SimError(Errc::InsufficientFunds,
                       node_str(id) + " balance " + acct.balance.str() +
                           " < stake " + amount.str());
    acct.balance -= amount;
    acct.staked += amount;
}

void StakeLedger::unstake(NodeId id, CoinAmount amount) {
    auto& acct = mutable_account(id);
    if (amount > acct.staked)
        throw SimError(Errc::InsufficientFunds,
                       node_str(id) + " staked " + acct.staked.str() +
                           " < unstake " + amount.str());
    acct.staked -= amount;
    acct.balance += amount;
}

double StakeLedger::update_reputation(NodeId id, ReputationEvent event) {
    double score = (event == ReputationEvent::HonestCompletion ||
                    event == ReputationEvent::ValidatedWork)
                       ? 1.0
                       : 0.0;
    auto& acct = mutable_account(id);
    acct.reputation = std::clamp(0.9 * acct.reputation + 0.1 * score, 0.0, 1.0);
    return acct.reputation;
}

CoinAmount StakeLedger::total_coins() const {
    CoinAmount total;
    for (const auto& [id, acct] : accounts_) {
        (void)id;
        total += acct.balance;
        total += acct.staked;
    }
    return total;
}

CoinAmount effective_weight(CoinAmount staked, CoinAmount stake_cap) {
    return std::min(staked, stake_cap);
}

ValidatorPool ValidatorPool::build(const StakeLedger& ledger, CoinAmount stake_cap,
                                   double reputation_threshold) {
    ValidatorPool pool;
    pool.ids_.reserve(ledger.size());
    ledger.for_each([&](NodeId id, const StakeLedger::Account& acct) {
        if (acct.staked.is_zero()) return;
        if (acct.reputation < reputation_threshold) return;
        pool.ids_.push_back(id);
        pool.weights_.push_back(effective_weight(acct.staked, stake_cap).to_real());
    });
    pool.prefix_.resize(pool.weights_.size());
    double running = 0.0;
    for (std::size_t i = 0; i < pool.weights_.size(); ++i) {
        running += pool.weights_[i];
        pool.prefix_[i] = running;
    }
    pool.total_weight_ = running;
    return pool;
}

std::vector<NodeId> ValidatorPool::sample(std::int64_t k, NodeId exclude, double lambda,
                                          Rng& rng) const {
    std::vector<bool> taken(ids_.size(), false);
    std::int64_t available = static_cast<std::int64_t>(ids_.size());
    auto excluded = std::lower_bound(ids_.begin(), ids_.end(), exclude);
    if (excluded != ids_.end() && *excluded == exclude) {
        taken[static_cast<std::size_t>(excluded - ids_.begin())] = true;
        --available;
    }
    if (available < k)
        throw SimError(Errc::InsufficientValidators,
                       "need " + std::to_string(k) + ", available " + std::to_string(available));

    // Per draw the target distribution over the remaining pool is
    // lambda/n' + (1-lambda) w_i/W' with n', W' renormalized after every
    // draw.  Choose the branch once, then sample that branch from the full
    // pool and reject unavailable nodes: rejection inside a branch leaves
    // the branch's conditional distribution exactly uniform (resp. weight-
    // proportional) over the remaining nodes.
    std::vector<NodeId> panel;
    panel.reserve(static_cast<std::size_t>(k));
    for (std::int64_t draw = 0; draw < k; ++draw) {
        bool uniform_branch = rng.unit() < lambda;
        std::size_t pick;
        do {
            if (uniform_branch) {
                pick = static_cast<std::size_t>(rng.below(ids_.size()));
            } else {
                double u = rng.uniform(0.0, total_weight_);
                pick = static_cast<std::size_t>(
                    std::lower_bound(prefix_.begin(), prefix_.end(), u) - prefix_.begin());
                if (pick >= ids_.size()) pick = ids_.size() - 1;
            }
        } while (taken[pick]);
        taken[pick] = true;
        panel.push_back(ids_[pick]);
    }
    return panel;
}

std::vector<NodeId> select_validators(const StakeLedger& ledger, std::int64_t k,
                                      NodeId exclude, double lambda,
                                      CoinAmount stake_cap, double reputation_threshold,
                                      Rng& rng) {
    return ValidatorPool::build(ledger, stake_cap, reputation_threshold)
        .sample(k, exclude, lambda, rng);
}

ValidationOutcome validate_output(JobId job_id, NodeId worker, double latent_quality,
                                  const std::vector<NodeId>& panel, double q_star,
                                  double observation_noise, Rng& rng) {
    for (NodeId v : panel)
        if (v == worker)
            throw SimError(Errc::SelfValidation,
                           node_str(worker) + " on its own validation panel for job " +
                               std::to_string(job_id));

    ValidationOutcome out;
    out.job_id = job_id;
    out.panel = panel;
    out.votes.reserve(panel.size());
    std::size_t approvals = 0;
    for (std::size_t i = 0; i < panel.size(); ++i) {
        double observed = std::clamp(
            latent_quality + rng.uniform(-observation_noise, observation_noise), 0.0, 1.0);
        bool approve = observed >= q_star;
        out.votes.push_back(approve ? Vote::Approve : Vote::Reject);
        if (approve) ++approvals;
    }
    out.verdict = (approvals * 2 > panel.size()) ? Verdict::Validated : Verdict::Rejected;
    return out;
}

}  // namespace poui
