#include "clinchsim/evaluate.hpp"

#include <stdexcept>
#include <string>

namespace clinchsim {

namespace {

// (points, wins) lexicographic comparison.
template <class P>
bool ahead(P pa, int wa, P pb, int wb) {
    return pa != pb ? pa > pb : wa > wb;
}

}  // namespace

std::vector<StandingsRow> score_season(const SeasonOutcome& season, const ScoringRule& rule, std::optional<int> up_to) {
    const int n = static_cast<int>(season.race_count());
    const int m = up_to.value_or(n);
    if (m < 1 || m > n)
        throw std::out_of_range("standings requested after " + std::to_string(m) + " races of a " + std::to_string(n) +
                                "-race season");
    std::vector<StandingsRow> rows(season.driver_count());
    for (std::size_t d = 0; d < rows.size(); ++d) rows[d].driver = DriverId::from_index(d);
    for (int r = 0; r < m; ++r) {
        const auto positions = season.race(static_cast<std::size_t>(r)).positions();
        for (std::size_t d = 0; d < rows.size(); ++d) {
            rows[d].points += points_for(rule, positions[d]);
            if (positions[d].place() == 1) ++rows[d].wins;
        }
    }
    return rows;
}

std::vector<DriverId> leaders(std::span<const StandingsRow> standings) {
    std::vector<DriverId> best;
    const StandingsRow* top = nullptr;
    for (const auto& row : standings) {
        if (!top || ahead(row.points, row.wins, top->points, top->wins)) {
            top = &row;
            best.assign(1, row.driver);
        } else if (row.points == top->points && row.wins == top->wins) {
            best.push_back(row.driver);
        }
    }
    return best;
}

DriverId champion(std::span<const StandingsRow> standings, RngStream& rng) {
    if (standings.empty()) throw std::invalid_argument("champion of an empty standings table");
    const auto best = leaders(standings);
    return best.size() == 1 ? best.front() : best[rng.below(best.size())];
}

int clinch_index(const SeasonOutcome& season, const ScoringRule& rule, DriverId champ) {
    return SeasonTable(season).clinch_index(rule, champ);
}

SeasonMetrics season_metrics(const SeasonOutcome& season, const ScoringRule& rule, RngStream& rng) {
    return SeasonTable(season).metrics(rule, rng);
}

SeasonTable::SeasonTable(const SeasonOutcome& season)
    : races_(season.race_count()), drivers_(season.driver_count()), places_(races_ * drivers_) {
    for (std::size_t r = 0; r < races_; ++r) {
        const auto positions = season.race(r).positions();
        for (std::size_t d = 0; d < drivers_; ++d) places_[r * drivers_ + d] = positions[d].place();
    }
}

SeasonTable::Totals SeasonTable::totals(const ScoringRule& rule, std::size_t up_to) const {
    Totals t{std::vector<Int128>(drivers_, 0), std::vector<int>(drivers_, 0)};
    for (std::size_t r = 0; r < up_to; ++r) {
        const int* row = &places_[r * drivers_];
        for (std::size_t d = 0; d < drivers_; ++d) {
            t.points[d] += rule.scaled_points(row[d]);
            t.wins[d] += row[d] == 1;
        }
    }
    return t;
}

DriverId SeasonTable::champion(const ScoringRule& rule, RngStream& rng) const {
    const Totals t = totals(rule, races_);
    std::vector<std::size_t> best;
    for (std::size_t d = 0; d < drivers_; ++d) {
        if (best.empty() || ahead(t.points[d], t.wins[d], t.points[best[0]], t.wins[best[0]]))
            best.assign(1, d);
        else if (t.points[d] == t.points[best[0]] && t.wins[d] == t.wins[best[0]])
            best.push_back(d);
    }
    if (best.empty()) throw std::invalid_argument("champion of a season without drivers");
    return DriverId::from_index(best.size() == 1 ? best.front() : best[rng.below(best.size())]);
}

int SeasonTable::clinch_index(const ScoringRule& rule, DriverId champ) const {
    const std::size_t c = champ.index();
    if (c >= drivers_) throw std::invalid_argument("champion outside the driver universe");
    {
        const Totals final_totals = totals(rule, races_);
        for (std::size_t d = 0; d < drivers_; ++d)
            if (ahead(final_totals.points[d], final_totals.wins[d], final_totals.points[c], final_totals.wins[c]))
                throw std::invalid_argument("driver " + std::to_string(champ.rank()) + " is not the champion of this season");
    }
    if (drivers_ == 1) return 1;

    const int n = static_cast<int>(races_);
    const Int128 top_score = rule.scaled_points(1);
    std::vector<Int128> points(drivers_, 0);
    std::vector<int> wins(drivers_, 0);
    for (int m = 1; m <= n; ++m) {
        const int* row = &places_[static_cast<std::size_t>(m - 1) * drivers_];
        for (std::size_t d = 0; d < drivers_; ++d) {
            points[d] += rule.scaled_points(row[d]);
            wins[d] += row[d] == 1;
        }
        std::size_t rival = c == 0 ? 1 : 0;
        for (std::size_t d = 0; d < drivers_; ++d)
            if (d != c && ahead(points[d], wins[d], points[rival], wins[rival])) rival = d;

        const Int128 lead = points[c] - points[rival];
        const Int128 remaining = static_cast<Int128>(n - m) * top_score;
        const bool open = lead < remaining || (lead == remaining && wins[c] - wins[rival] <= n - m);
        if (!open) return m;
    }
    return n;
}

SeasonMetrics SeasonTable::metrics(const ScoringRule& rule, RngStream& rng) const {
    SeasonMetrics out;
    out.champion = champion(rule, rng);
    out.clinch_index = clinch_index(rule, out.champion);
    out.uninteresting_count = static_cast<int>(races_) - out.clinch_index;
    int wins = 0;
    for (std::size_t r = 0; r < races_; ++r) wins += place(r, out.champion.index()) == 1;
    out.champion_won_a_race = wins > 0;
    return out;
}

}  // namespace clinchsim
