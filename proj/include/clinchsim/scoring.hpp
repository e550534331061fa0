#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clinchsim/rational.hpp"
#include "clinchsim/types.hpp"

namespace clinchsim {

/// Points awarded per finishing place: s_1 >= s_2 >= ... >= s_L >= 0, s_1 > 0.
/// Places beyond L score nothing.
///
/// Scores are kept exactly. For fast season evaluation the rule also carries
/// the scores rescaled to integers over their least common denominator;
/// standings computed from the scaled values compare exactly like the
/// rationals they stand for.
class ScoringRule {
public:
    ScoringRule(std::string name, std::vector<Rational> scores, std::optional<Rational> geometric_p = std::nullopt);

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] std::span<const Rational> scores() const { return scores_; }
    [[nodiscard]] std::size_t scored_places() const { return scores_.size(); }
    [[nodiscard]] const std::optional<Rational>& geometric_p() const { return p_; }
    [[nodiscard]] const Rational& first_place_score() const { return scores_.front(); }

    /// Common denominator of all scores.
    [[nodiscard]] Int128 scale() const { return scale_; }
    /// scores()[j] * scale(), as integers.
    [[nodiscard]] std::span<const Int128> scaled_scores() const { return scaled_; }
    /// Scaled points for a place (1-based); 0 outside the scored range.
    [[nodiscard]] Int128 scaled_points(int place) const {
        return place >= 1 && static_cast<std::size_t>(place) <= scaled_.size() ? scaled_[place - 1] : Int128{0};
    }

    /// Canonical rule-spec string that parses back to an equal rule.
    [[nodiscard]] std::string to_spec() const;

    friend bool operator==(const ScoringRule& a, const ScoringRule& b) {
        return a.name_ == b.name_ && a.scores_ == b.scores_ && a.p_ == b.p_;
    }

private:
    std::string name_;
    std::vector<Rational> scores_;
    std::optional<Rational> p_;
    Int128 scale_ = 1;
    std::vector<Int128> scaled_;
};

enum class Preset { S1, S2, S3, S4, M1993 };

/// Historical points systems (Formula One 1961-1990, 1991-2002, 2003-2009,
/// since 2010; Grand Prix motorcycle racing since 1993).
ScoringRule preset_rule(Preset preset);
ScoringRule preset_rule(std::string_view name);

/// Geometric rule: s_j = (p^(L+1-j) - 1) / (p - 1), or L + 1 - j when p = 1.
/// Equivalently s_j = 1 + p + ... + p^(L-j).
ScoringRule geometric_rule(const Rational& p, int places = 10);

/// Custom rule from a score vector; throws ValidationError if not non-increasing.
ScoringRule custom_rule(std::vector<Rational> scores, std::string name = {});

/// Parses one rule spec: S1|S2|S3|S4|M1993|G:<p>|V:<v1,v2,...>.
/// G1..G4 are accepted as aliases for p = 1, 1.05, 1.3, 1.6.
ScoringRule parse_rule_spec(std::string_view spec);

/// Parses a comma-separated list of rule specs. Numbers following a V: item
/// belong to that vector, so "S4,V:10,5,1,G:1.3" yields three rules.
/// Semicolons are also accepted as item separators.
std::vector<ScoringRule> parse_rule_list(std::string_view list);

/// The eight rules compared throughout: S1-S4 and G1-G4.
std::vector<ScoringRule> standard_rules();

Rational points_for(const ScoringRule& rule, Position position);

/// 100 * s_j / s_1 for every scored place.
std::vector<Rational> normalize_to_100(const ScoringRule& rule);

}  // namespace clinchsim
