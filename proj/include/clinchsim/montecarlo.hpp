#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "clinchsim/racegen.hpp"
#include "clinchsim/scoring.hpp"
#include "clinchsim/types.hpp"

namespace clinchsim {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct ExperimentConfig {
    /// Builtin dataset name ("standard", "small-margin") or CSV path.
    std::string dataset = "standard";
    Method method = Method::M2;
    int races_n = 20;
    std::int64_t replications = 100000;
    /// Rule specs, evaluated in this order on every simulated season.
    std::vector<std::string> rules = {"S1", "S2", "S3", "S4", "G1", "G2", "G3", "G4"};
    /// Turn the reference champion's wins into second places before evaluation.
    bool risk_averse = true;
    std::string reference_rule = "S4";
    std::uint64_t master_seed = kDefaultSeed;
    /// Worker threads; hardware concurrency when unset.
    std::optional<unsigned> threads;
    PairDraw pair_draw = PairDraw::distinct;

    /// Throws ValidationError on out-of-range fields.
    void validate() const;
};

struct RuleSummary {
    std::string rule;
    double mean_uninteresting = 0;
    double se_mean_uninteresting = 0;
    double p_champion_no_win = 0;
    double se_p_no_win = 0;
    double p_uninteresting_ge3 = 0;
    double se_ge3 = 0;

    friend bool operator==(const RuleSummary&, const RuleSummary&) = default;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::string dataset_name;
    std::vector<RuleSummary> rows;
};

/// Called once per (replication, rule) from worker threads; must be thread-safe.
using ReplicationObserver =
    std::function<void(std::int64_t replication, std::size_t rule_index, const SeasonOutcome& season, const SeasonMetrics& metrics)>;

/// Stream key of replication r (1-based) in a season of n races.
std::uint64_t replication_stream(int races_n, std::int64_t replication);

/// Replication r draws from RngStream(master_seed, replication_stream(n, r)):
/// it generates a season, applies the risk-averse transform when enabled, and
/// evaluates every rule on that same season in config order. Aggregates are
/// reduced in replication order, so the report does not depend on threading.
ExperimentReport run_experiment(const ExperimentConfig& config);
ExperimentReport run_experiment(const ExperimentConfig& config, const Dataset& dataset,
                                const ReplicationObserver& observer = {});

/// One experiment per season length in [from, to] (within 3..30).
std::vector<ExperimentReport> sweep_races(const ExperimentConfig& config, int from, int to);
std::vector<ExperimentReport> sweep_races(const ExperimentConfig& config, const Dataset& dataset, int from, int to);

}  // namespace clinchsim
