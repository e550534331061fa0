#include <doctest.h>

#include <algorithm>
#include <random>

#include "clinchsim/dataset.hpp"
#include "clinchsim/evaluate.hpp"
#include "oracles.hpp"

using namespace clinchsim;

namespace {

SeasonOutcome history(const char* name) {
    LoadOptions options;
    options.partial = true;
    const Dataset ds = load_dataset(history_fixture_path(name), options);
    REQUIRE(ds.seasons.size() == 1);
    return season_outcome(ds, ds.seasons.front());
}

std::vector<Rational> points_of(const std::vector<StandingsRow>& rows) {
    std::vector<Rational> out;
    for (const auto& r : rows) out.push_back(r.points);
    return out;
}

SeasonOutcome from_matrix(const oracle::Season& season) {
    std::vector<RaceResult> races;
    for (const auto& r : season) races.push_back(RaceResult::from_places(std::span<const int>(r)));
    return SeasonOutcome(std::move(races));
}

}  // namespace

TEST_CASE("Formula One 2002: totals and clinch under the 1991-2002 rule") {
    const auto season = history("f1-2002");
    const auto s2 = preset_rule(Preset::S2);
    CHECK(points_of(score_season(season, s2)) == std::vector<Rational>{144, 77, 50, 42, 41});

    const auto after11 = score_season(season, s2, 11);
    CHECK(after11[0].points == Rational(96));
    CHECK(after11[2].points == Rational(34));

    RngStream rng(1, 1);
    const auto metrics = season_metrics(season, s2, rng);
    CHECK(metrics.champion == DriverId(1));
    CHECK(metrics.clinch_index == 11);
    CHECK(metrics.uninteresting_count == 6);
    CHECK(metrics.champion_won_a_race);
}

TEST_CASE("Formula One 2002 rescored with the 2003-2009 rule clinches a race later") {
    const auto season = history("f1-2002");
    const auto s3 = preset_rule(Preset::S3);
    const auto after11 = score_season(season, s3, 11);
    CHECK(after11[0].points == Rational(102));
    CHECK(after11[2].points == Rational(50));
    CHECK(clinch_index(season, s3, DriverId(1)) == 12);
}

TEST_CASE("125cc 1999: champion without a race win") {
    const auto season = history("gp125-1999");
    const auto rule = preset_rule(Preset::M1993);
    const auto rows = score_season(season, rule);
    CHECK(points_of(rows) == std::vector<Rational>{227, 226, 190, 173, 171, 163, 155});
    CHECK(rows[0].wins == 0);
    CHECK(rows[1].wins == 5);
    CHECK(rows[2].wins == 5);
    RngStream rng(1, 1);
    const auto metrics = season_metrics(season, rule, rng);
    CHECK(metrics.champion == DriverId(1));
    CHECK_FALSE(metrics.champion_won_a_race);
    CHECK(metrics.clinch_index == 16);
}

TEST_CASE("MotoGP 2020: title secured at the penultimate round") {
    const auto season = history("motogp-2020");
    const auto rule = preset_rule(Preset::M1993);
    const auto rows = score_season(season, rule);
    CHECK(points_of(rows) == std::vector<Rational>{171, 158, 139, 135, 135, 132, 132});
    CHECK(clinch_index(season, rule, DriverId(1)) == 13);
    // 29-point lead over Morbidelli after round 13.
    const auto after13 = score_season(season, rule, 13);
    CHECK(after13[0].points - after13[1].points == Rational(29));
}

TEST_CASE("champion: points, then wins, then lot") {
    std::vector<StandingsRow> rows = {{DriverId(1), Rational(10), 0}, {DriverId(2), Rational(10), 2}, {DriverId(3), Rational(4), 3}};
    RngStream rng(7, 0);
    CHECK(champion(rows, rng) == DriverId(2));
    CHECK(leaders(rows) == std::vector<DriverId>{DriverId(2)});

    rows[0].wins = 2;
    CHECK(leaders(rows) == std::vector<DriverId>{DriverId(1), DriverId(2)});
    int first = 0;
    for (std::uint64_t s = 0; s < 400; ++s) {
        RngStream lot(s, 3);
        first += champion(rows, lot) == DriverId(1);
    }
    CHECK(first > 150);
    CHECK(first < 250);
}

TEST_CASE("a lot-tied title is never clinched early") {
    const SeasonOutcome season({RaceResult::from_places({1, 2}), RaceResult::from_places({2, 1})});
    const auto s4 = preset_rule(Preset::S4);
    CHECK(clinch_index(season, s4, DriverId(1)) == 2);
    CHECK(clinch_index(season, s4, DriverId(2)) == 2);
}

TEST_CASE("single-driver season is decided after the first race") {
    const SeasonOutcome season({RaceResult::from_places({1}), RaceResult::from_places({1}), RaceResult::from_places({1})});
    CHECK(clinch_index(season, preset_rule(Preset::S4), DriverId(1)) == 1);
}

TEST_CASE("clinch index needs a leader") {
    const SeasonOutcome season({RaceResult::from_places({1, 2}), RaceResult::from_places({1, 2})});
    CHECK_THROWS_AS(clinch_index(season, preset_rule(Preset::S4), DriverId(2)), std::invalid_argument);
    CHECK_THROWS_AS(score_season(season, preset_rule(Preset::S4), 3), std::out_of_range);
}

TEST_CASE("three drivers, three races: derived clinch after race 2") {
    // S3: after two races driver 1 has 20 points against 8, and the last race
    // is worth at most 10. After one race the lead is only 2.
    const oracle::Season matrix = {{1, 2, 3}, {1, 0, 0}, {2, 1, 3}};
    const auto season = from_matrix(matrix);
    const auto s3 = preset_rule(Preset::S3);
    const oracle::Scores scores = {10, 8, 6, 5, 4, 3, 2, 1};
    CHECK(oracle::brute_force_clinch(matrix, scores, 0) == 2);
    CHECK(clinch_index(season, s3, DriverId(1)) == 2);
}

TEST_CASE("clinch index agrees with exhaustive search over every completion") {
    std::mt19937 gen(2024);
    const auto races = oracle::all_races(3);
    const std::vector<std::pair<const char*, oracle::Scores>> rules = {
        {"S4", {25, 18, 15, 12, 10, 8, 6, 4, 2, 1}}, {"S2", {10, 6, 4, 3, 2, 1}}, {"V:3,2", {3, 2}}, {"V:1,1,1", {1, 1, 1}}};
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 1 + gen() % 4;
        oracle::Season matrix;
        for (std::size_t r = 0; r < n; ++r) matrix.push_back(races[gen() % races.size()]);
        const auto& [spec, scores] = rules[static_cast<std::size_t>(trial) % rules.size()];
        const auto leader = oracle::unique_leader(oracle::totals(matrix, scores, n));
        if (!leader) continue;
        CAPTURE(spec);
        CAPTURE(trial);
        const auto season = from_matrix(matrix);
        CHECK(clinch_index(season, parse_rule_spec(spec), DriverId::from_index(*leader)) ==
              oracle::brute_force_clinch(matrix, scores, *leader));
        ++checked;
    }
    CHECK(checked > 60);
}

TEST_CASE("standings are the sum of per-race points") {
    const auto season = history("motogp-2020");
    const auto rule = preset_rule(Preset::M1993);
    for (int m = 1; m <= static_cast<int>(season.race_count()); ++m) {
        const auto rows = score_season(season, rule, m);
        for (std::size_t d = 0; d < season.driver_count(); ++d) {
            Rational sum;
            int wins = 0;
            for (int r = 0; r < m; ++r) {
                const auto pos = season.race(static_cast<std::size_t>(r)).positions()[d];
                sum += points_for(rule, pos);
                wins += pos.place() == 1;
            }
            CHECK(rows[d].points == sum);
            CHECK(rows[d].wins == wins);
        }
    }
}

TEST_CASE("metrics do not change when every score is multiplied by a constant") {
    std::mt19937 gen(99);
    const auto races = oracle::all_races(4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<RaceResult> season_races;
        for (int r = 0; r < 8; ++r) season_races.push_back(RaceResult::from_places(std::span<const int>(races[gen() % races.size()])));
        const SeasonOutcome season(season_races);
        const ScoringRule s4 = preset_rule(Preset::S4);
        std::vector<Rational> scaled;
        for (const auto& s : s4.scores()) scaled.push_back(s * Rational(7, 3));
        RngStream a(5, static_cast<std::uint64_t>(trial)), b(5, static_cast<std::uint64_t>(trial));
        CHECK(season_metrics(season, s4, a) == season_metrics(season, custom_rule(scaled), b));
    }
}

TEST_CASE("flattened season table agrees with the rational evaluation") {
    std::mt19937 gen(7);
    const auto races = oracle::all_races(4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<RaceResult> season_races;
        const int n = 1 + static_cast<int>(gen() % 10);
        for (int r = 0; r < n; ++r) season_races.push_back(RaceResult::from_places(std::span<const int>(races[gen() % races.size()])));
        const SeasonOutcome season(season_races);
        const SeasonTable table(season);
        for (const auto& rule : standard_rules()) {
            RngStream a(3, static_cast<std::uint64_t>(trial)), b(3, static_cast<std::uint64_t>(trial));
            CHECK(table.metrics(rule, a) == season_metrics(season, rule, b));
        }
    }
}
