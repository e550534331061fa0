#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "clinchsim/rational.hpp"

namespace clinchsim {

/// Rejected input: a value that violates a domain invariant.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A driver, identified by final standing in the source season (1 = champion).
class DriverId {
public:
    constexpr DriverId() = default;
    explicit DriverId(int rank);

    [[nodiscard]] constexpr int rank() const { return rank_; }
    /// Zero-based slot in position vectors.
    [[nodiscard]] constexpr std::size_t index() const { return static_cast<std::size_t>(rank_ - 1); }
    static DriverId from_index(std::size_t index) { return DriverId(static_cast<int>(index) + 1); }

    friend constexpr auto operator<=>(DriverId, DriverId) = default;

private:
    int rank_ = 1;
};

/// Finishing position in one race: a classified place, or unclassified ("---").
class Position {
public:
    constexpr Position() = default;
    static Position classified(int place);
    static constexpr Position unclassified() { return Position(); }

    [[nodiscard]] constexpr bool is_classified() const { return place_ != 0; }
    /// Place number; 0 when unclassified.
    [[nodiscard]] constexpr int place() const { return place_; }

    friend constexpr bool operator==(Position, Position) = default;

private:
    explicit constexpr Position(std::uint16_t place) : place_(place) {}
    std::uint16_t place_ = 0;
};

/// One race: the position of every driver, indexed by DriverId.
class RaceResult {
public:
    RaceResult() = default;

    /// Classified places must be distinct, form {1..m} and include place 1.
    explicit RaceResult(std::vector<Position> positions, std::optional<int> source_season = std::nullopt);

    /// Convenience: 0 in `places` means unclassified.
    static RaceResult from_places(std::span<const int> places, std::optional<int> source_season = std::nullopt);
    static RaceResult from_places(std::initializer_list<int> places, std::optional<int> source_season = std::nullopt);

    /// Excerpt of a larger field (e.g. a printed standings table): places must be
    /// distinct but may have gaps, and place 1 may belong to someone not listed.
    static RaceResult partial(std::vector<Position> positions, std::optional<int> source_season = std::nullopt);

    [[nodiscard]] std::size_t driver_count() const { return positions_.size(); }
    [[nodiscard]] std::span<const Position> positions() const { return positions_; }
    [[nodiscard]] Position position(DriverId d) const { return positions_.at(d.index()); }
    [[nodiscard]] std::optional<int> source_season() const { return season_; }
    [[nodiscard]] bool is_partial() const { return partial_; }

    /// Driver holding `place`, if any.
    [[nodiscard]] std::optional<DriverId> driver_at(int place) const;

    /// Same race over a larger field; the extra drivers are unclassified.
    [[nodiscard]] RaceResult padded(std::size_t driver_count) const;

    /// Exchanges the positions of two drivers.
    [[nodiscard]] RaceResult with_swapped(DriverId a, DriverId b) const;

    /// Places as plain integers (0 = unclassified), e.g. [2, 3, 1].
    [[nodiscard]] std::vector<int> places() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const RaceResult& a, const RaceResult& b) {
        return a.positions_ == b.positions_ && a.season_ == b.season_;
    }
    friend bool operator<(const RaceResult& a, const RaceResult& b) { return a.places() < b.places(); }

private:
    std::vector<Position> positions_;
    std::optional<int> season_;
    bool partial_ = false;
};

/// An ordered list of races over one driver universe.
class SeasonOutcome {
public:
    SeasonOutcome() = default;
    explicit SeasonOutcome(std::vector<RaceResult> races);

    [[nodiscard]] std::size_t race_count() const { return races_.size(); }
    [[nodiscard]] std::size_t driver_count() const { return races_.empty() ? 0 : races_.front().driver_count(); }
    [[nodiscard]] std::span<const RaceResult> races() const { return races_; }
    [[nodiscard]] const RaceResult& race(std::size_t i) const { return races_.at(i); }

    friend bool operator==(const SeasonOutcome&, const SeasonOutcome&) = default;

private:
    std::vector<RaceResult> races_;
};

/// Pool of historical races used as the sampling population.
struct Dataset {
    std::string name;
    std::vector<RaceResult> races;
    std::size_t driver_count = 0;
    std::vector<int> seasons;

    /// Checks padding and non-emptiness; throws ValidationError.
    void validate() const;

    /// Races whose source season is `season`, in file order.
    [[nodiscard]] std::vector<RaceResult> season_races(int season) const;

    friend bool operator==(const Dataset&, const Dataset&) = default;
};

/// Final (or intermediate) standings entry for one driver.
struct StandingsRow {
    DriverId driver;
    Rational points;
    int wins = 0;

    friend bool operator==(const StandingsRow&, const StandingsRow&) = default;
};

/// Per-season result of evaluating one rule.
struct SeasonMetrics {
    DriverId champion;
    int clinch_index = 0;
    int uninteresting_count = 0;
    bool champion_won_a_race = false;

    friend bool operator==(const SeasonMetrics&, const SeasonMetrics&) = default;
};

}  // namespace clinchsim
