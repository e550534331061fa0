// clinchsim: simulate championship seasons under positional scoring rules and
// report how often the title is decided early or won without a race win.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "clinchsim/dataset.hpp"
#include "clinchsim/evaluate.hpp"
#include "clinchsim/montecarlo.hpp"
#include "clinchsim/report_io.hpp"
#include "clinchsim/scoring.hpp"

namespace cs = clinchsim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutputOptions {
    std::string format = "csv";
    std::string out;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
        cmd->add_option("--out", out, "Write to this file instead of stdout");
    }

    [[nodiscard]] bool json() const { return format == "json"; }

    template <class Fn>
    void emit(Fn&& write) const {
        if (out.empty()) {
            write(std::cout);
            return;
        }
        std::ofstream file(out);
        if (!file) throw cs::DataError("cannot write '" + out + "'");
        write(file);
    }
};

struct ExperimentOptions {
    std::string dataset = "standard";
    std::string method = "2";
    int races = 20;
    std::int64_t reps = 100000;
    std::string rules = "S1,S2,S3,S4,G1,G2,G3,G4";
    std::uint64_t seed = cs::kDefaultSeed;
    unsigned threads = 0;
    bool raw = false;
    std::string reference_rule = "S4";
    std::string pair_draw = "distinct";

    void add_to(CLI::App* cmd, bool races_flag) {
        cmd->add_option("--dataset", dataset, "Builtin dataset (standard, small-margin) or a season,race,driver,position CSV")
            ->capture_default_str();
        cmd->add_option("--method", method, "Race generation: 1 = resample a race, 2 = crossover of two races")
            ->check(CLI::IsMember({"1", "2"}))
            ->capture_default_str();
        if (races_flag) cmd->add_option("--races", races, "Races per simulated season")->capture_default_str();
        cmd->add_option("--reps", reps, "Replications (simulated seasons)")->capture_default_str();
        cmd->add_option("--rules", rules, "Comma-separated rule specs: S1|S2|S3|S4|M1993|G:<p>|V:<v1,v2,...>")
            ->capture_default_str();
        cmd->add_option("--seed", seed, "Master seed")->capture_default_str();
        cmd->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
        cmd->add_flag("--raw", raw, "Evaluate the simulated seasons without the risk-averse transform");
        cmd->add_option("--reference-rule", reference_rule, "Rule that picks the champion for the risk-averse transform")
            ->capture_default_str();
        cmd->add_option("--pair-draw", pair_draw, "Method 2 source races: distinct pair or two independent draws")
            ->check(CLI::IsMember({"distinct", "independent"}))
            ->capture_default_str();
    }

    [[nodiscard]] cs::ExperimentConfig config() const {
        cs::ExperimentConfig c;
        c.dataset = dataset;
        c.method = cs::parse_method(method);
        c.races_n = races;
        c.replications = reps;
        c.rules.clear();
        for (const auto& rule : cs::parse_rule_list(rules)) c.rules.push_back(rule.to_spec());
        c.risk_averse = !raw;
        c.reference_rule = cs::parse_rule_spec(reference_rule).to_spec();
        c.master_seed = seed;
        if (threads > 0) c.threads = threads;
        c.pair_draw = pair_draw == "independent" ? cs::PairDraw::independent : cs::PairDraw::distinct;
        c.validate();
        return c;
    }
};

cs::Dataset load_or_data_error(const std::string& name) {
    try {
        return cs::resolve_dataset(name);
    } catch (const cs::ValidationError& e) {
        throw cs::DataError(e.what());
    }
}

std::pair<int, int> parse_race_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("race range must look like A..B, got '" + text + "'");
    }
}

int run_simulate(const ExperimentOptions& opts, const OutputOptions& output) {
    const cs::ExperimentConfig config = opts.config();
    const cs::Dataset dataset = load_or_data_error(config.dataset);
    const cs::ExperimentReport report = cs::run_experiment(config, dataset);
    output.emit([&](std::ostream& os) {
        if (output.json())
            os << cs::reports_to_json(std::span(&report, 1)).dump(2) << '\n';
        else
            cs::write_reports_csv(os, std::span(&report, 1));
    });
    return kExitOk;
}

int run_sweep(const ExperimentOptions& opts, const std::string& range, const OutputOptions& output) {
    const auto [from, to] = parse_race_range(range);
    const cs::ExperimentConfig config = opts.config();
    if (from < 3 || to > 30 || from > to)
        throw UsageError(fmt::format("race range {}..{} must satisfy 3 <= A <= B <= 30", from, to));
    const cs::Dataset dataset = load_or_data_error(config.dataset);
    const auto reports = cs::sweep_races(config, dataset, from, to);
    output.emit([&](std::ostream& os) {
        if (output.json())
            os << cs::reports_to_json(reports).dump(2) << '\n';
        else
            cs::write_reports_csv(os, reports);
    });
    return kExitOk;
}

struct HistoryOptions {
    std::string fixture;
    std::string csv;
    int season = 0;
    std::string rule = "S4";
    int up_to = 0;
    std::uint64_t seed = cs::kDefaultSeed;
};

int run_history(const HistoryOptions& opts, const OutputOptions& output) {
    if (opts.fixture.empty() == opts.csv.empty()) throw UsageError("give exactly one of --fixture or --csv");
    const cs::ScoringRule rule = cs::parse_rule_spec(opts.rule);

    cs::Dataset dataset;
    try {
        cs::LoadOptions load;
        load.partial = true;
        dataset = cs::load_dataset(opts.fixture.empty() ? std::filesystem::path(opts.csv) : cs::history_fixture_path(opts.fixture),
                                   load);
    } catch (const cs::ValidationError& e) {
        throw cs::DataError(e.what());
    }
    int season = opts.season;
    if (season == 0) {
        if (dataset.seasons.size() != 1) throw UsageError("the file holds several seasons; pick one with --season");
        season = dataset.seasons.front();
    }
    const cs::SeasonOutcome outcome = cs::season_outcome(dataset, season);
    const int n = static_cast<int>(outcome.race_count());
    if (opts.up_to < 0 || opts.up_to > n) throw UsageError(fmt::format("--up-to must be within 1..{}", n));

    cs::RngStream lots(opts.seed, 0);
    const cs::SeasonMetrics metrics = cs::season_metrics(outcome, rule, lots);
    auto standings = cs::score_season(outcome, rule, opts.up_to > 0 ? std::optional<int>(opts.up_to) : std::nullopt);
    std::stable_sort(standings.begin(), standings.end(), [](const cs::StandingsRow& a, const cs::StandingsRow& b) {
        return a.points != b.points ? a.points > b.points : a.wins > b.wins;
    });
    const int counted = opts.up_to > 0 ? opts.up_to : n;

    output.emit([&](std::ostream& os) {
        if (output.json()) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& s : standings)
                rows.push_back({{"driver", s.driver.rank()},
                                {"points", s.points.to_string()},
                                {"points_value", s.points.to_double()},
                                {"wins", s.wins},
                                {"champion", s.driver == metrics.champion}});
            const nlohmann::json doc = {{"season", season},
                                        {"rule", rule.name()},
                                        {"races", n},
                                        {"races_counted", counted},
                                        {"champion", metrics.champion.rank()},
                                        {"clinch_index", metrics.clinch_index},
                                        {"uninteresting", metrics.uninteresting_count},
                                        {"champion_won_a_race", metrics.champion_won_a_race},
                                        {"standings", rows}};
            os << doc.dump(2) << '\n';
            return;
        }
        os << "season,rule,races,races_counted,rank,driver,points,wins,champion,clinch_index,uninteresting\n";
        int rank = 0;
        for (const auto& s : standings)
            os << fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", season, rule.name(), n, counted, ++rank, s.driver.rank(),
                              s.points.to_string(), s.wins, s.driver == metrics.champion ? "true" : "false",
                              metrics.clinch_index, metrics.uninteresting_count);
    });
    return kExitOk;
}

int run_rules(const std::string& show, bool normalized, const OutputOptions& output) {
    const auto rules = cs::parse_rule_list(show);
    output.emit([&](std::ostream& os) {
        nlohmann::json doc = nlohmann::json::array();
        if (!output.json()) os << "rule,place,score,exact\n";
        for (const auto& rule : rules) {
            const auto values = normalized ? cs::normalize_to_100(rule)
                                           : std::vector<cs::Rational>(rule.scores().begin(), rule.scores().end());
            nlohmann::json scores = nlohmann::json::array();
            nlohmann::json exact = nlohmann::json::array();
            for (std::size_t j = 0; j < values.size(); ++j) {
                if (!output.json())
                    os << fmt::format("{},{},{},{}\n", rule.name(), j + 1, cs::format_double(values[j].to_double()),
                                      values[j].to_string());
                scores.push_back(values[j].to_double());
                exact.push_back(values[j].to_string());
            }
            doc.push_back({{"rule", rule.name()}, {"spec", rule.to_spec()}, {"normalized", normalized}, {"scores", scores},
                           {"exact", exact}});
        }
        if (output.json()) os << doc.dump(2) << '\n';
    });
    return kExitOk;
}

int run_validate(const std::string& dataset_name, const std::string& reference_path, const OutputOptions& output) {
    cs::Dataset dataset;
    std::vector<cs::ReferenceRow> reference;
    try {
        dataset = dataset_name == "all" ? cs::load_dataset(cs::f1_races_path()) : cs::resolve_dataset(dataset_name);
        reference = cs::load_reference(reference_path.empty() ? cs::reference_table_path() : std::filesystem::path(reference_path));
    } catch (const cs::ValidationError& e) {
        throw cs::DataError(e.what());
    }
    // Only the seasons present in the dataset are checked.
    std::erase_if(reference, [&](const cs::ReferenceRow& row) {
        return std::find(dataset.seasons.begin(), dataset.seasons.end(), row.season) == dataset.seasons.end() &&
               dataset_name != "all";
    });
    const cs::ValidationReport report = cs::validate_against_reference(dataset, reference);
    output.emit([&](std::ostream& os) {
        if (output.json())
            os << cs::validation_to_json(report).dump(2) << '\n';
        else
            cs::write_validation_csv(os, report);
    });
    for (const auto& e : report.entries)
        if (e.status == cs::ValidationEntry::Status::mismatch)
            std::cerr << fmt::format("season {}: {}: expected {}, got {}\n", e.season, e.field, e.expected, e.actual);
    return report.ok() ? kExitOk : kExitData;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clinchsim: early clinch vs. winning without a race win, for positional scoring rules"};
    app.require_subcommand(1);

    OutputOptions simulate_out, sweep_out, history_out, rules_out, validate_out;

    ExperimentOptions simulate_opts;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo experiment: one CSV row per rule");
    simulate_opts.add_to(simulate, true);
    simulate_out.add_to(simulate);

    ExperimentOptions sweep_opts;
    std::string sweep_range = "3..20";
    auto* sweep = app.add_subcommand("sweep", "Repeat the experiment for every season length in a range");
    sweep_opts.add_to(sweep, false);
    sweep->add_option("--races", sweep_range, "Season lengths A..B (3 <= A <= B <= 30)")->capture_default_str();
    sweep_out.add_to(sweep);

    HistoryOptions history_opts;
    auto* history = app.add_subcommand("history", "Standings, champion and clinch race of a recorded season");
    history->add_option("--fixture", history_opts.fixture, "Bundled fixture: f1-2002, gp125-1999, motogp-2020");
    history->add_option("--csv", history_opts.csv, "season,race,driver,position CSV");
    history->add_option("--season", history_opts.season, "Season to analyse when the CSV holds several");
    history->add_option("--rule", history_opts.rule, "Rule spec")->capture_default_str();
    history->add_option("--up-to", history_opts.up_to, "Standings after this many races (default: all)");
    history->add_option("--seed", history_opts.seed, "Seed for drawing lots on exact ties")->capture_default_str();
    history_out.add_to(history);

    std::string rules_show = "S1,S2,S3,S4,G1,G2,G3,G4";
    bool rules_normalized = false;
    auto* rules = app.add_subcommand("rules", "Print score vectors");
    rules->add_option("--show", rules_show, "Comma-separated rule specs")->capture_default_str();
    rules->add_flag("--normalized", rules_normalized, "Scale so that first place scores 100");
    rules_out.add_to(rules);

    std::string validate_dataset = "all";
    std::string validate_reference;
    auto* dataset_cmd = app.add_subcommand("dataset", "Dataset utilities");
    dataset_cmd->require_subcommand(1);
    auto* validate = dataset_cmd->add_subcommand("validate", "Compare bundled seasons with the published season summary");
    validate->add_option("--dataset", validate_dataset, "all, standard, small-margin or a CSV path")->capture_default_str();
    validate->add_option("--reference", validate_reference, "Reference CSV (default: bundled season summary)");
    validate_out.add_to(validate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*simulate) return run_simulate(simulate_opts, simulate_out);
        if (*sweep) return run_sweep(sweep_opts, sweep_range, sweep_out);
        if (*history) return run_history(history_opts, history_out);
        if (*rules) return run_rules(rules_show, rules_normalized, rules_out);
        if (*validate) return run_validate(validate_dataset, validate_reference, validate_out);
    } catch (const cs::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const cs::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
