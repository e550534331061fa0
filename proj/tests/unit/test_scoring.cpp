#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "clinchsim/scoring.hpp"

using namespace clinchsim;

namespace {

std::vector<int> integer_scores(const ScoringRule& rule) {
    std::vector<int> out;
    for (const auto& s : rule.scores()) {
        REQUIRE(s.is_integer());
        out.push_back(static_cast<int>(s.num()));
    }
    return out;
}

// Rounds an exact value half-up to `decimals` places, printed with that many.
std::string round_decimal(const Rational& value, int decimals) {
    Int128 scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    const Rational shifted = value * Rational(scale) + Rational(1, 2);
    Int128 whole = shifted.num() / shifted.den();
    std::string digits = int128_to_string(whole);
    if (decimals == 0) return digits;
    while (digits.size() <= static_cast<std::size_t>(decimals)) digits.insert(digits.begin(), '0');
    digits.insert(digits.end() - decimals, '.');
    return digits;
}

int printed_decimals(const std::string& text) {
    const auto dot = text.find('.');
    return dot == std::string::npos ? 0 : static_cast<int>(text.size() - dot - 1);
}

}  // namespace

TEST_CASE("historical presets") {
    CHECK(integer_scores(preset_rule(Preset::S1)) == std::vector<int>{9, 6, 4, 3, 2, 1, 0, 0, 0, 0});
    CHECK(integer_scores(preset_rule(Preset::S2)) == std::vector<int>{10, 6, 4, 3, 2, 1, 0, 0, 0, 0});
    CHECK(integer_scores(preset_rule(Preset::S3)) == std::vector<int>{10, 8, 6, 5, 4, 3, 2, 1, 0, 0});
    CHECK(integer_scores(preset_rule(Preset::S4)) == std::vector<int>{25, 18, 15, 12, 10, 8, 6, 4, 2, 1});
    CHECK(integer_scores(preset_rule(Preset::M1993)) ==
          std::vector<int>{25, 20, 16, 13, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1});
    CHECK(preset_rule("s4") == preset_rule(Preset::S4));
    CHECK_THROWS_AS(preset_rule("S5"), ValidationError);
}

TEST_CASE("geometric rules match the published table to its printed digits") {
    // Printed values, places 1..10.
    const std::vector<std::pair<std::string, std::vector<std::string>>> table = {
        {"1", {"10", "9", "8", "7", "6", "5", "4", "3", "2", "1"}},
        {"1.05", {"12.58", "11.03", "9.55", "8.14", "6.80", "5.53", "4.310", "3.1525", "2.05", "1"}},
        {"1.3", {"42.62", "32.01", "23.86", "17.58", "12.76", "9.04", "6.187", "3.99", "2.3", "1"}},
        {"1.6", {"181.59", "112.87", "69.92", "43.07", "26.30", "15.81", "9.256", "5.16", "2.6", "1"}},
    };
    for (const auto& [p, printed] : table) {
        const auto rule = geometric_rule(Rational::parse(p));
        REQUIRE(rule.scored_places() == 10);
        for (std::size_t j = 0; j < 10; ++j) {
            CAPTURE(p);
            CAPTURE(j + 1);
            CHECK(round_decimal(rule.scores()[j], printed_decimals(printed[j])) == printed[j]);
        }
    }
}

TEST_CASE("geometric rule agrees with the closed form and telescopes") {
    for (const char* p_text : {"1.05", "1.3", "1.6", "2", "3/2"}) {
        const Rational p = Rational::parse(p_text);
        const auto rule = geometric_rule(p);
        const double pd = p.to_double();
        for (int j = 1; j <= 10; ++j) {
            const double closed = (std::pow(pd, 11 - j) - 1) / (pd - 1);
            CHECK(rule.scores()[j - 1].to_double() == doctest::Approx(closed).epsilon(1e-12));
        }
        // s_j - s_{j+1} = p^(10-j)
        Rational power(1);
        for (int j = 9; j >= 1; --j) {
            CHECK(rule.scores()[j - 1] - rule.scores()[j] == power * p);
            power *= p;
        }
    }
}

TEST_CASE("geometric rule tends to the linear rule as p approaches 1") {
    const auto linear = geometric_rule(Rational(1));
    const auto near = geometric_rule(Rational(1001, 1000));
    for (std::size_t j = 0; j < 10; ++j)
        CHECK(near.scores()[j].to_double() == doctest::Approx(linear.scores()[j].to_double()).epsilon(5e-3));
    // Exact totals need a common denominator that fits in 128 bits.
    CHECK_THROWS_AS(geometric_rule(Rational(1000001, 1000000)), ValidationError);
    CHECK_THROWS_AS(geometric_rule(Rational(0)), ValidationError);
}

TEST_CASE("normalisation to 100 matches the published curves") {
    const std::vector<double> g2 = {100, 87.6662309556708, 75.9197842467858, 64.7326921430859, 54.0783187109906,
                                    43.9312963947095, 34.2674656172989, 25.0638172578602, 16.2984378679186,
                                    7.95045749654567};
    const std::vector<double> g3 = {100, 75.1181969543552, 55.9783484577053, 41.255388075667, 29.9300339356375,
                                    21.2182230586917, 14.5168300764258, 9.36191239775962, 5.39659110647797,
                                    2.34634395933825};
    const std::vector<double> g4 = {100, 62.1558090887332, 38.5031897691914, 23.7203026944778, 14.4809982727818,
                                    8.70643300922185, 5.09732971949685, 2.84164016341873, 1.4318341908699,
                                    0.550705458026885};
    const std::vector<double> s4 = {100, 72, 60, 48, 40, 32, 24, 16, 8, 4};
    const std::vector<std::pair<std::string, const std::vector<double>*>> curves = {
        {"G2", &g2}, {"G3", &g3}, {"G4", &g4}, {"S4", &s4}};
    for (const auto& [spec, expected] : curves) {
        const auto normalized = normalize_to_100(parse_rule_spec(spec));
        for (std::size_t j = 0; j < 10; ++j) CHECK(normalized[j].to_double() == doctest::Approx((*expected)[j]).epsilon(1e-12));
    }
    CHECK(normalize_to_100(preset_rule(Preset::S1))[1] == Rational(200, 3));
}

TEST_CASE("rule specs") {
    CHECK(parse_rule_spec("G3") == geometric_rule(Rational::parse("1.3")));
    CHECK(parse_rule_spec("G:1.3").scores()[0] == geometric_rule(Rational::parse("1.3")).scores()[0]);
    CHECK(parse_rule_spec("G:2").name() == "G:2");
    const auto custom = parse_rule_spec("V:10,5,1");
    CHECK(integer_scores(custom) == std::vector<int>{10, 5, 1});
    CHECK(custom.to_spec() == "V:10,5,1");
    CHECK_THROWS_WITH_AS(parse_rule_spec("V:1,2,3"), doctest::Contains("non-increasing"), ValidationError);
    CHECK_THROWS_AS(parse_rule_spec("V:0,0"), ValidationError);
    CHECK_THROWS_AS(parse_rule_spec("V:3,-1"), ValidationError);
    CHECK_THROWS_AS(parse_rule_spec("Q"), ValidationError);

    const auto list = parse_rule_list("S4,V:10,5,1,G:1.3");
    REQUIRE(list.size() == 3);
    CHECK(list[0].name() == "S4");
    CHECK(integer_scores(list[1]) == std::vector<int>{10, 5, 1});
    CHECK(list[2].scores() .size() == 10);
    CHECK(parse_rule_list("S1;S2").size() == 2);

    for (const auto& rule : standard_rules()) CHECK(parse_rule_spec(rule.to_spec()) == rule);
    CHECK(standard_rules().size() == 8);
}

TEST_CASE("points for a position") {
    const auto s4 = preset_rule(Preset::S4);
    CHECK(points_for(s4, Position::classified(1)) == Rational(25));
    CHECK(points_for(s4, Position::classified(10)) == Rational(1));
    CHECK(points_for(s4, Position::classified(11)) == Rational(0));
    CHECK(points_for(s4, Position::unclassified()) == Rational(0));
}

TEST_CASE("scaled scores are integers proportional to the exact scores") {
    const auto g2 = parse_rule_spec("G2");
    for (std::size_t j = 0; j < 10; ++j) CHECK(Rational(g2.scaled_scores()[j], g2.scale()) == g2.scores()[j]);
    CHECK(g2.scaled_points(11) == 0);
    CHECK(g2.scaled_points(0) == 0);
}
