#include "clinchsim/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "clinchsim/dataset.hpp"
#include "clinchsim/evaluate.hpp"

namespace clinchsim {

namespace {

constexpr std::int64_t kChunk = 256;

struct Outcome {
    std::uint8_t uninteresting;
    bool no_win;
};

double proportion_se(double p, std::int64_t n) { return std::sqrt(p * (1.0 - p) / static_cast<double>(n)); }

}  // namespace

void ExperimentConfig::validate() const {
    if (replications < 1) throw ValidationError("replications must be ≥ 1");
    if (races_n < 1) throw ValidationError("races per season must be ≥ 1");
    if (races_n > 255) throw ValidationError("races per season must be ≤ 255");
    if (rules.empty()) throw ValidationError("at least one rule is required");
    for (const auto& spec : rules) parse_rule_spec(spec);
    parse_rule_spec(reference_rule);
    if (threads && *threads == 0) throw ValidationError("threads must be ≥ 1");
    if (replications > (std::int64_t{1} << 32)) throw ValidationError("replications must be < 2^32");
}

std::uint64_t replication_stream(int races_n, std::int64_t replication) {
    return (static_cast<std::uint64_t>(races_n) << 32) | static_cast<std::uint64_t>(replication);
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    config.validate();
    return run_experiment(config, resolve_dataset(config.dataset));
}

ExperimentReport run_experiment(const ExperimentConfig& config, const Dataset& dataset, const ReplicationObserver& observer) {
    config.validate();
    dataset.validate();
    std::vector<ScoringRule> rules;
    rules.reserve(config.rules.size());
    for (const auto& spec : config.rules) rules.push_back(parse_rule_spec(spec));
    const ScoringRule reference = parse_rule_spec(config.reference_rule);

    const std::int64_t reps = config.replications;
    const std::size_t rule_count = rules.size();
    std::vector<Outcome> outcomes(static_cast<std::size_t>(reps) * rule_count);

    auto replicate = [&](std::int64_t r) {
        RngStream rng(config.master_seed, replication_stream(config.races_n, r + 1));
        SeasonOutcome season = generate_season(dataset, config.method, config.races_n, rng, config.pair_draw);
        if (config.risk_averse) season = risk_averse_transform(season, reference, rng);
        const SeasonTable table(season);
        for (std::size_t k = 0; k < rule_count; ++k) {
            const SeasonMetrics m = table.metrics(rules[k], rng);
            outcomes[static_cast<std::size_t>(r) * rule_count + k] = {static_cast<std::uint8_t>(m.uninteresting_count),
                                                                       !m.champion_won_a_race};
            if (observer) observer(r + 1, k, season, m);
        }
    };

    unsigned threads = config.threads.value_or(std::max(1u, std::thread::hardware_concurrency()));
    threads = static_cast<unsigned>(std::min<std::int64_t>(threads, (reps + kChunk - 1) / kChunk));
    if (threads <= 1) {
        for (std::int64_t r = 0; r < reps; ++r) replicate(r);
    } else {
        std::atomic<std::int64_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                try {
                    for (std::int64_t start; (start = next.fetch_add(kChunk)) < reps;)
                        for (std::int64_t r = start; r < std::min(reps, start + kChunk); ++r) replicate(r);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = reps;
                }
            });
        pool.clear();
        if (failure) std::rethrow_exception(failure);
    }

    ExperimentReport report;
    report.config = config;
    report.dataset_name = dataset.name;
    const double n = static_cast<double>(reps);
    for (std::size_t k = 0; k < rule_count; ++k) {
        // Integer accumulators: the sums are exact, so the reduction order cannot matter.
        std::int64_t sum = 0, sum_sq = 0, no_win = 0, ge3 = 0;
        for (std::int64_t r = 0; r < reps; ++r) {
            const Outcome& o = outcomes[static_cast<std::size_t>(r) * rule_count + k];
            sum += o.uninteresting;
            sum_sq += static_cast<std::int64_t>(o.uninteresting) * o.uninteresting;
            no_win += o.no_win;
            ge3 += o.uninteresting >= 3;
        }
        RuleSummary row;
        row.rule = rules[k].name();
        row.mean_uninteresting = static_cast<double>(sum) / n;
        if (reps > 1) {
            const Int128 spread = static_cast<Int128>(reps) * sum_sq - static_cast<Int128>(sum) * sum;
            const double var = static_cast<double>(spread) / (n * (n - 1));
            row.se_mean_uninteresting = std::sqrt(var / n);
        }
        row.p_champion_no_win = static_cast<double>(no_win) / n;
        row.se_p_no_win = proportion_se(row.p_champion_no_win, reps);
        row.p_uninteresting_ge3 = static_cast<double>(ge3) / n;
        row.se_ge3 = proportion_se(row.p_uninteresting_ge3, reps);
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::vector<ExperimentReport> sweep_races(const ExperimentConfig& config, int from, int to) {
    config.validate();
    return sweep_races(config, resolve_dataset(config.dataset), from, to);
}

std::vector<ExperimentReport> sweep_races(const ExperimentConfig& config, const Dataset& dataset, int from, int to) {
    if (from < 3 || to > 30 || from > to)
        throw ValidationError("race range " + std::to_string(from) + ".." + std::to_string(to) +
                              " must satisfy 3 ≤ from ≤ to ≤ 30");
    std::vector<ExperimentReport> out;
    for (int n = from; n <= to; ++n) {
        ExperimentConfig c = config;
        c.races_n = n;
        out.push_back(run_experiment(c, dataset));
    }
    return out;
}

}  // namespace clinchsim
