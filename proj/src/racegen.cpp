#include "clinchsim/racegen.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "clinchsim/evaluate.hpp"

namespace clinchsim {

namespace {

constexpr int kUnclassifiedKey = std::numeric_limits<int>::max();

int spot_key(Position p) { return p.is_classified() ? p.place() : kUnclassifiedKey; }

void require_races(const Dataset& dataset) {
    if (dataset.races.empty()) throw ValidationError("empty dataset");
}

std::pair<std::size_t, std::size_t> draw_pair(std::size_t pool, RngStream& rng, PairDraw pairs) {
    const std::size_t first = rng.below(pool);
    if (pairs == PairDraw::independent || pool == 1) return {first, rng.below(pool)};
    std::size_t second = rng.below(pool - 1);
    if (second >= first) ++second;
    return {first, second};
}

}  // namespace

Method parse_method(std::string_view text) {
    if (text == "1" || text == "M1" || text == "m1") return Method::M1;
    if (text == "2" || text == "M2" || text == "m2") return Method::M2;
    throw ValidationError("unknown race generation method '" + std::string(text) + "' (expected 1 or 2)");
}

int method_number(Method m) { return m == Method::M1 ? 1 : 2; }

RaceResult sample_race_m1(const Dataset& dataset, RngStream& rng) {
    require_races(dataset);
    return dataset.races[rng.below(dataset.races.size())];
}

RaceResult sample_race_m2(const Dataset& dataset, RngStream& rng, PairDraw pairs) {
    require_races(dataset);
    const auto [xi, yi] = draw_pair(dataset.races.size(), rng, pairs);
    const auto x = dataset.races[xi].positions();
    const auto y = dataset.races[yi].positions();
    const std::size_t drivers = x.size();

    std::vector<int> key(drivers);
    for (std::size_t d = 0; d < drivers; ++d) key[d] = spot_key(rng.coin() ? y[d] : x[d]);

    std::vector<std::size_t> order(drivers);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = drivers; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });

    std::vector<Position> out(drivers);
    for (std::size_t rank = 0; rank < drivers; ++rank) out[order[rank]] = Position::classified(static_cast<int>(rank) + 1);
    return RaceResult(std::move(out));
}

SeasonOutcome generate_season(const Dataset& dataset, Method method, int races, RngStream& rng, PairDraw pairs) {
    if (races < 1) throw ValidationError("a season needs at least one race, got " + std::to_string(races));
    require_races(dataset);
    std::vector<RaceResult> out;
    out.reserve(static_cast<std::size_t>(races));
    for (int i = 0; i < races; ++i)
        out.push_back(method == Method::M1 ? sample_race_m1(dataset, rng) : sample_race_m2(dataset, rng, pairs));
    return SeasonOutcome(std::move(out));
}

SeasonOutcome risk_averse_transform(const SeasonOutcome& season, DriverId champ) {
    std::vector<RaceResult> races;
    races.reserve(season.race_count());
    for (const auto& race : season.races()) {
        const auto runner_up = race.driver_at(2);
        if (race.position(champ).place() == 1 && runner_up)
            races.push_back(race.with_swapped(champ, *runner_up));
        else
            races.push_back(race);
    }
    return SeasonOutcome(std::move(races));
}

SeasonOutcome risk_averse_transform(const SeasonOutcome& season, const ScoringRule& reference_rule, RngStream& rng) {
    const DriverId champ = SeasonTable(season).champion(reference_rule, rng);
    return risk_averse_transform(season, champ);
}

std::map<std::vector<int>, Rational> enumerate_m2_distribution(const Dataset& dataset, PairDraw pairs) {
    require_races(dataset);
    const std::size_t drivers = dataset.driver_count;
    const std::size_t pool = dataset.races.size();
    if (drivers > 6 || pool > 4)
        throw std::invalid_argument("exhaustive Method 2 enumeration is limited to 6 drivers and 4 races");

    std::vector<std::pair<std::size_t, std::size_t>> source_pairs;
    for (std::size_t a = 0; a < pool; ++a)
        for (std::size_t b = 0; b < pool; ++b)
            if (pairs == PairDraw::independent || a != b || pool == 1) source_pairs.emplace_back(a, b);

    std::map<std::vector<int>, Rational> dist;
    const Rational pair_weight(1, static_cast<Int128>(source_pairs.size()));
    const Rational coin_weight(1, static_cast<Int128>(1) << drivers);

    for (const auto& [a, b] : source_pairs) {
        const auto x = dataset.races[a].positions();
        const auto y = dataset.races[b].positions();
        for (std::size_t mask = 0; mask < (std::size_t{1} << drivers); ++mask) {
            std::vector<int> key(drivers);
            for (std::size_t d = 0; d < drivers; ++d) key[d] = spot_key((mask >> d) & 1 ? y[d] : x[d]);

            // Drivers sorted by key; each block of equal keys is permuted in every way.
            std::vector<std::size_t> sorted(drivers);
            std::iota(sorted.begin(), sorted.end(), 0);
            std::stable_sort(sorted.begin(), sorted.end(), [&](std::size_t i, std::size_t j) { return key[i] < key[j]; });
            std::vector<std::pair<std::size_t, std::size_t>> blocks;
            for (std::size_t i = 0; i < drivers;) {
                std::size_t j = i;
                while (j < drivers && key[sorted[j]] == key[sorted[i]]) ++j;
                blocks.emplace_back(i, j);
                i = j;
            }
            Int128 orderings = 1;
            for (auto [lo, hi] : blocks)
                for (std::size_t k = 2; k <= hi - lo; ++k) orderings *= static_cast<Int128>(k);
            const Rational weight = pair_weight * coin_weight * Rational(1, orderings);

            auto visit = [&](auto&& self, std::size_t block) -> void {
                if (block == blocks.size()) {
                    std::vector<int> places(drivers);
                    for (std::size_t rank = 0; rank < drivers; ++rank) places[sorted[rank]] = static_cast<int>(rank) + 1;
                    dist[places] += weight;
                    return;
                }
                auto [lo, hi] = blocks[block];
                std::sort(sorted.begin() + static_cast<std::ptrdiff_t>(lo), sorted.begin() + static_cast<std::ptrdiff_t>(hi));
                do {
                    self(self, block + 1);
                } while (std::next_permutation(sorted.begin() + static_cast<std::ptrdiff_t>(lo),
                                               sorted.begin() + static_cast<std::ptrdiff_t>(hi)));
            };
            visit(visit, 0);
        }
    }
    return dist;
}

}  // namespace clinchsim
