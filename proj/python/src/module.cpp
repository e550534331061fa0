#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "clinchsim/dataset.hpp"
#include "clinchsim/evaluate.hpp"
#include "clinchsim/montecarlo.hpp"
#include "clinchsim/racegen.hpp"
#include "clinchsim/report_io.hpp"
#include "clinchsim/scoring.hpp"

namespace py = pybind11;
namespace cs = clinchsim;

namespace {

using Matrix = std::vector<std::vector<int>>;

cs::SeasonOutcome to_season(const Matrix& races) {
    std::vector<cs::RaceResult> out;
    out.reserve(races.size());
    for (const auto& r : races) out.push_back(cs::RaceResult::from_places(std::span<const int>(r)));
    return cs::SeasonOutcome(std::move(out));
}

Matrix to_matrix(const cs::SeasonOutcome& season) {
    Matrix out;
    for (const auto& race : season.races()) out.push_back(race.places());
    return out;
}

cs::PairDraw to_pair_draw(const std::string& text) {
    if (text == "distinct") return cs::PairDraw::distinct;
    if (text == "independent") return cs::PairDraw::independent;
    throw cs::ValidationError("pair_draw must be 'distinct' or 'independent', got '" + text + "'");
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

cs::ExperimentConfig make_config(const std::string& dataset, int method, int races, std::int64_t reps,
                                 std::optional<std::vector<std::string>> rules, std::uint64_t seed,
                                 std::optional<unsigned> threads, bool risk_averse, const std::string& reference_rule,
                                 const std::string& pair_draw) {
    cs::ExperimentConfig c;
    c.dataset = dataset;
    c.method = cs::parse_method(std::to_string(method));
    c.races_n = races;
    c.replications = reps;
    if (rules) c.rules = *rules;
    c.master_seed = seed;
    c.threads = threads;
    c.risk_averse = risk_averse;
    c.reference_rule = reference_rule;
    c.pair_draw = to_pair_draw(pair_draw);
    return c;
}

}  // namespace

PYBIND11_MODULE(_clinchsim, m) {
    m.doc() = "Championship clinch and winless-champion simulation";

    py::register_exception<cs::DataError>(m, "DataError", PyExc_OSError);
    py::register_exception<cs::ParseError>(m, "ParseError", PyExc_ValueError);

    m.attr("DEFAULT_SEED") = cs::kDefaultSeed;

    m.def("set_data_dir", &cs::set_data_dir, py::arg("path"));
    m.def("data_dir", &cs::data_dir);

    m.def(
        "rule_scores",
        [](const std::string& spec) {
            const auto rule = cs::parse_rule_spec(spec);
            std::vector<std::string> out;
            for (const auto& s : rule.scores()) out.push_back(s.to_string());
            return out;
        },
        py::arg("spec"), "Exact scores of a rule spec as strings ('25', '21/20').");
    m.def(
        "normalized_scores",
        [](const std::string& spec) {
            std::vector<double> out;
            for (const auto& s : cs::normalize_to_100(cs::parse_rule_spec(spec))) out.push_back(s.to_double());
            return out;
        },
        py::arg("spec"));

    m.def(
        "standings",
        [](const Matrix& races, const std::string& rule, std::optional<int> up_to) {
            py::list out;
            for (const auto& row : cs::score_season(to_season(races), cs::parse_rule_spec(rule), up_to))
                out.append(py::dict(py::arg("driver") = row.driver.index() + 1, py::arg("points") = row.points.to_string(),
                                    py::arg("wins") = row.wins));
            return out;
        },
        py::arg("races"), py::arg("rule") = "S4", py::arg("up_to") = py::none(),
        "Points and wins per driver; races are lists of places per driver (0 = unclassified).");
    m.def(
        "season_metrics",
        [](const Matrix& races, const std::string& rule, std::uint64_t seed) {
            cs::RngStream rng(seed, 0);
            const auto metrics = cs::season_metrics(to_season(races), cs::parse_rule_spec(rule), rng);
            return py::dict(py::arg("champion") = metrics.champion.index() + 1, py::arg("clinch_index") = metrics.clinch_index,
                            py::arg("uninteresting") = metrics.uninteresting_count,
                            py::arg("champion_won_a_race") = metrics.champion_won_a_race);
        },
        py::arg("races"), py::arg("rule") = "S4", py::arg("seed") = 0);
    m.def(
        "risk_averse_transform",
        [](const Matrix& races, const std::string& reference_rule, std::uint64_t seed) {
            cs::RngStream rng(seed, 0);
            return to_matrix(cs::risk_averse_transform(to_season(races), cs::parse_rule_spec(reference_rule), rng));
        },
        py::arg("races"), py::arg("reference_rule") = "S4", py::arg("seed") = 0);
    m.def(
        "m2_distribution",
        [](const Matrix& pool, const std::string& pair_draw) {
            cs::Dataset ds;
            for (const auto& r : pool) ds.races.push_back(cs::RaceResult::from_places(std::span<const int>(r)));
            ds.driver_count = ds.races.empty() ? 0 : ds.races.front().driver_count();
            py::dict out;
            for (const auto& [result, prob] : cs::enumerate_m2_distribution(ds, to_pair_draw(pair_draw)))
                out[py::tuple(py::cast(result))] = prob.to_string();
            return out;
        },
        py::arg("pool"), py::arg("pair_draw") = "distinct", "Exact Method 2 distribution over results of a small pool.");

    m.def(
        "simulate",
        [](const std::string& dataset, int method, int races, std::int64_t reps, std::optional<std::vector<std::string>> rules,
           std::uint64_t seed, std::optional<unsigned> threads, bool risk_averse, const std::string& reference_rule,
           const std::string& pair_draw) {
            const auto c = make_config(dataset, method, races, reps, rules, seed, threads, risk_averse, reference_rule, pair_draw);
            cs::ExperimentReport report;
            {
                py::gil_scoped_release release;
                report = cs::run_experiment(c);
            }
            return json_to_py(cs::reports_to_json(std::span(&report, 1)));
        },
        py::arg("dataset") = "standard", py::arg("method") = 2, py::arg("races") = 20, py::arg("reps") = 100000,
        py::arg("rules") = py::none(), py::arg("seed") = cs::kDefaultSeed, py::arg("threads") = py::none(),
        py::arg("risk_averse") = true, py::arg("reference_rule") = "S4", py::arg("pair_draw") = "distinct",
        "One row per rule, with the same keys as the CSV report.");
    m.def(
        "sweep",
        [](int first, int last, const std::string& dataset, int method, std::int64_t reps,
           std::optional<std::vector<std::string>> rules, std::uint64_t seed, std::optional<unsigned> threads, bool risk_averse,
           const std::string& reference_rule, const std::string& pair_draw) {
            const auto c = make_config(dataset, method, first, reps, rules, seed, threads, risk_averse, reference_rule, pair_draw);
            std::vector<cs::ExperimentReport> reports;
            {
                py::gil_scoped_release release;
                reports = cs::sweep_races(c, first, last);
            }
            return json_to_py(cs::reports_to_json(reports));
        },
        py::arg("first") = 3, py::arg("last") = 20, py::arg("dataset") = "standard", py::arg("method") = 2,
        py::arg("reps") = 10000, py::arg("rules") = py::none(), py::arg("seed") = cs::kDefaultSeed,
        py::arg("threads") = py::none(), py::arg("risk_averse") = true, py::arg("reference_rule") = "S4",
        py::arg("pair_draw") = "distinct");

    m.def(
        "validate_dataset",
        [](std::optional<std::filesystem::path> dataset, std::optional<std::filesystem::path> reference) {
            const auto ds = cs::load_dataset(dataset.value_or(cs::f1_races_path()));
            const auto ref = cs::load_reference(reference.value_or(cs::reference_table_path()));
            return json_to_py(cs::validation_to_json(cs::validate_against_reference(ds, ref)));
        },
        py::arg("dataset") = py::none(), py::arg("reference") = py::none());
}
