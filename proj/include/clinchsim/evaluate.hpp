#pragma once

#include <optional>
#include <span>
#include <vector>

#include "clinchsim/rng.hpp"
#include "clinchsim/scoring.hpp"
#include "clinchsim/types.hpp"

namespace clinchsim {

/// Points and wins of every driver over the first `up_to` races (all by default).
/// Rows are in driver order.
std::vector<StandingsRow> score_season(const SeasonOutcome& season, const ScoringRule& rule,
                                       std::optional<int> up_to = std::nullopt);

/// Most points, then most wins; a remaining tie is decided by lot. The lot
/// consumes one draw from `rng`, and only when a tie exists.
DriverId champion(std::span<const StandingsRow> standings, RngStream& rng);

/// Drivers sharing the best (points, wins) pair, in driver order.
std::vector<DriverId> leaders(std::span<const StandingsRow> standings);

/// Smallest m after which the title is secured for `champ`: with the best
/// other driver (by points, then wins) after m races, neither
///   lead < (n - m) * s_1, nor
///   lead == (n - m) * s_1 and champ wins - rival wins <= n - m
/// holds. A title still level after the last race gives n.
/// Throws std::invalid_argument if `champ` is not a season leader.
int clinch_index(const SeasonOutcome& season, const ScoringRule& rule, DriverId champ);

SeasonMetrics season_metrics(const SeasonOutcome& season, const ScoringRule& rule, RngStream& rng);

/// Places of every race flattened into one array for repeated evaluation
/// under several rules: place of driver d in race r at [r * drivers + d].
class SeasonTable {
public:
    explicit SeasonTable(const SeasonOutcome& season);

    [[nodiscard]] std::size_t races() const { return races_; }
    [[nodiscard]] std::size_t drivers() const { return drivers_; }
    [[nodiscard]] int place(std::size_t race, std::size_t driver) const { return places_[race * drivers_ + driver]; }

    /// Same result as season_metrics(), without building rational standings.
    SeasonMetrics metrics(const ScoringRule& rule, RngStream& rng) const;

    /// Champion under `rule` (lot on ties).
    DriverId champion(const ScoringRule& rule, RngStream& rng) const;
    int clinch_index(const ScoringRule& rule, DriverId champ) const;

private:
    struct Totals {
        std::vector<Int128> points;
        std::vector<int> wins;
    };
    Totals totals(const ScoringRule& rule, std::size_t up_to) const;

    std::size_t races_ = 0;
    std::size_t drivers_ = 0;
    std::vector<int> places_;
};

}  // namespace clinchsim
