#ifndef POUI_STAKING_HPP
#define POUI_STAKING_HPP

#include <map>
#include <vector>

#include "poui/coin.hpp"
#include "poui/rng.hpp"
#include "poui/types.hpp"

namespace poui {

enum class ReputationEvent : std::uint8_t {
    HonestCompletion,
    ValidatedWork,
    RejectedWork,
    ScreeningRejection,
};

enum class Vote : std::uint8_t { Approve, Reject };
enum class Verdict : std::uint8_t { Validated, Rejected };

struct ValidationOutcome {
    JobId job_id = 0;
    std::vector<NodeId> panel;
    std::vector<Vote> votes;
    Verdict verdict = Verdict::Rejected;
};

/// Per-node coin balances, staked amounts, reputation scores and role bits.
/// Single-writer; ordered by node id so every scan is deterministic.
class StakeLedger {
public:
    struct Account {
        CoinAmount balance;
        CoinAmount staked;
        double reputation = 1.0;
        Role roles{};
    };

    void create_node(NodeId id, Role roles, CoinAmount balance, double reputation);
    bool exists(NodeId id) const { return accounts_.contains(id); }
    const Account& account(NodeId id) const;

    CoinAmount balance(NodeId id) const { return account(id).balance; }
    CoinAmount staked(NodeId id) const { return account(id).staked; }
    double reputation(NodeId id) const { return account(id).reputation; }
    bool node_has_role(NodeId id, Role r) const { return has_role(account(id).roles, r); }
    void grant_role(NodeId id, Role r);

    void credit(NodeId id, CoinAmount amount);
    void debit(NodeId id, CoinAmount amount);  // throws InsufficientFunds

    /// Moves coins balance -> staked (stake) or staked -> balance (unstake).
    void stake(NodeId id, CoinAmount amount);
    void unstake(NodeId id, CoinAmount amount);

    /// EMA update: reputation <- clamp(0.9 r + 0.1 event_score, 0, 1) where
    /// event_score is 1 for honest events and 0 for dishonest ones.
    double update_reputation(NodeId id, ReputationEvent event);

    /// Sum of all balances plus staked coins (exact).
    CoinAmount total_coins() const;

    std::size_t size() const { return accounts_.size(); }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (const auto& [id, acct] : accounts_) fn(id, acct);
    }

private:
    Account& mutable_account(NodeId id);
    std::map<NodeId, Account> accounts_;
};

/// Selection weight of a stake under the cap: min(staked, cap).
CoinAmount effective_weight(CoinAmount staked, CoinAmount stake_cap);

/// Snapshot of the eligible validator set (staked > 0, reputation >=
/// threshold) with capped weights and prefix sums.  Building it once per
/// step amortizes panel selection across many jobs while stakes are frozen.
class ValidatorPool {
public:
    static ValidatorPool build(const StakeLedger& ledger, CoinAmount stake_cap,
                               double reputation_threshold);

    /// Samples k distinct validators without replacement, excluding one
    /// node.  Per draw, node i is chosen with probability
    /// lambda/n + (1-lambda) * w_i / W over the nodes still in the pool.
    /// Throws InsufficientValidators when fewer than k remain.
    std::vector<NodeId> sample(std::int64_t k, NodeId exclude, double lambda, Rng& rng) const;

    std::size_t size() const { return ids_.size(); }

private:
    std::vector<NodeId> ids_;      // ascending
    std::vector<double> weights_;  // capped stake weights, coin units
    std::vector<double> prefix_;   // inclusive prefix sums of weights_
    double total_weight_ = 0.0;
};

/// One-shot form of ValidatorPool::build + sample over the whole ledger.
std::vector<NodeId> select_validators(const StakeLedger& ledger, std::int64_t k,
                                      NodeId exclude, double lambda,
                                      CoinAmount stake_cap, double reputation_threshold,
                                      Rng& rng);

/// Majority vote over noisy observations of a job's latent quality.  Each
/// panelist approves iff clamp(latent + U(-noise, +noise), 0, 1) >= q_star.
/// Throws SelfValidation if the job's worker sits on the panel.
ValidationOutcome validate_output(JobId job_id, NodeId worker, double latent_quality,
                                  const std::vector<NodeId>& panel, double q_star,
                                  double observation_noise, Rng& rng);

}  // namespace poui

#endif
