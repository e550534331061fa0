#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "clinchsim/rng.hpp"
#include "clinchsim/scoring.hpp"
#include "clinchsim/types.hpp"

namespace clinchsim {

enum class Method {
    /// Resample one historical race.
    M1,
    /// Uniform crossover of two historical races, re-ranked with random tie-breaks.
    M2,
};

Method parse_method(std::string_view text);
int method_number(Method m);

/// How Method 2 picks its two source races.
enum class PairDraw {
    /// Two different races (one race only if the pool has a single race).
    distinct,
    /// Two independent draws; both may be the same race.
    independent,
};

RaceResult sample_race_m1(const Dataset& dataset, RngStream& rng);

/// Each driver takes its provisional spot from one of two source races by a
/// fair coin. Drivers are then ranked by provisional spot, unclassified spots
/// after every classified one, ties broken uniformly at random. Every driver
/// receives a place in 1..driver_count.
///
/// Draw order: source races, one coin per driver, then a Fisher-Yates
/// shuffle that fixes the tie-break order.
RaceResult sample_race_m2(const Dataset& dataset, RngStream& rng, PairDraw pairs = PairDraw::distinct);

SeasonOutcome generate_season(const Dataset& dataset, Method method, int races, RngStream& rng,
                              PairDraw pairs = PairDraw::distinct);

/// In every race won by `champ`, the winner and the runner-up trade places.
/// A race without a second classified driver is left as it is.
SeasonOutcome risk_averse_transform(const SeasonOutcome& season, DriverId champ);

/// Same, with the champion determined under `reference_rule` (lot on ties).
SeasonOutcome risk_averse_transform(const SeasonOutcome& season, const ScoringRule& reference_rule, RngStream& rng);

/// Exact Method 2 outcome distribution by enumerating every source pair, every
/// coin vector and every tie-break order. Only for tiny pools
/// (driver_count <= 6, at most 4 races); throws std::invalid_argument otherwise.
/// Keys are place vectors such as [1, 3, 2].
std::map<std::vector<int>, Rational> enumerate_m2_distribution(const Dataset& dataset,
                                                                PairDraw pairs = PairDraw::distinct);

}  // namespace clinchsim
