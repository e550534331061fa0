#include "clinchsim/types.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace clinchsim {

DriverId::DriverId(int rank) : rank_(rank) {
    if (rank < 1) throw ValidationError("driver rank must be >= 1, got " + std::to_string(rank));
}

Position Position::classified(int place) {
    if (place < 1 || place > 0xFFFF) throw ValidationError("classified place must be >= 1, got " + std::to_string(place));
    return Position(static_cast<std::uint16_t>(place));
}

namespace {

void check_distinct(std::span<const Position> positions) {
    std::vector<int> places;
    for (Position p : positions)
        if (p.is_classified()) places.push_back(p.place());
    std::sort(places.begin(), places.end());
    if (auto dup = std::adjacent_find(places.begin(), places.end()); dup != places.end())
        throw ValidationError("duplicate classified place " + std::to_string(*dup));
}

void check_contiguous(std::span<const Position> positions) {
    std::vector<int> places;
    for (Position p : positions)
        if (p.is_classified()) places.push_back(p.place());
    std::sort(places.begin(), places.end());
    if (places.empty() || places.front() != 1) throw ValidationError("no driver holds place 1");
    for (std::size_t i = 0; i < places.size(); ++i)
        if (places[i] != static_cast<int>(i) + 1)
            throw ValidationError("classified places have a gap before place " + std::to_string(places[i]));
}

}  // namespace

RaceResult::RaceResult(std::vector<Position> positions, std::optional<int> source_season)
    : positions_(std::move(positions)), season_(source_season) {
    check_distinct(positions_);
    check_contiguous(positions_);
}

RaceResult RaceResult::from_places(std::span<const int> places, std::optional<int> source_season) {
    std::vector<Position> positions;
    positions.reserve(places.size());
    for (int p : places) positions.push_back(p == 0 ? Position::unclassified() : Position::classified(p));
    return RaceResult(std::move(positions), source_season);
}

RaceResult RaceResult::from_places(std::initializer_list<int> places, std::optional<int> source_season) {
    return from_places(std::span<const int>(places.begin(), places.size()), source_season);
}

RaceResult RaceResult::partial(std::vector<Position> positions, std::optional<int> source_season) {
    check_distinct(positions);
    RaceResult r;
    r.positions_ = std::move(positions);
    r.season_ = source_season;
    r.partial_ = true;
    return r;
}

std::optional<DriverId> RaceResult::driver_at(int place) const {
    for (std::size_t i = 0; i < positions_.size(); ++i)
        if (positions_[i].place() == place && place != 0) return DriverId::from_index(i);
    return std::nullopt;
}

RaceResult RaceResult::padded(std::size_t driver_count) const {
    if (driver_count < positions_.size()) throw ValidationError("cannot pad a race to fewer drivers");
    RaceResult r = *this;
    r.positions_.resize(driver_count, Position::unclassified());
    return r;
}

RaceResult RaceResult::with_swapped(DriverId a, DriverId b) const {
    RaceResult r = *this;
    std::swap(r.positions_.at(a.index()), r.positions_.at(b.index()));
    return r;
}

std::vector<int> RaceResult::places() const {
    std::vector<int> out;
    out.reserve(positions_.size());
    for (Position p : positions_) out.push_back(p.place());
    return out;
}

std::string RaceResult::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        if (i) os << ", ";
        if (positions_[i].is_classified())
            os << positions_[i].place();
        else
            os << "---";
    }
    os << ']';
    return os.str();
}

SeasonOutcome::SeasonOutcome(std::vector<RaceResult> races) : races_(std::move(races)) {
    if (races_.empty()) throw ValidationError("a season needs at least one race");
    const std::size_t drivers = races_.front().driver_count();
    for (const auto& r : races_)
        if (r.driver_count() != drivers) throw ValidationError("races of a season must share one driver universe");
}

void Dataset::validate() const {
    if (races.empty()) throw ValidationError("empty dataset");
    for (const auto& r : races)
        if (r.driver_count() != driver_count)
            throw ValidationError("race not padded to the dataset driver count " + std::to_string(driver_count));
}

std::vector<RaceResult> Dataset::season_races(int season) const {
    std::vector<RaceResult> out;
    for (const auto& r : races)
        if (r.source_season() == season) out.push_back(r);
    return out;
}

}  // namespace clinchsim
