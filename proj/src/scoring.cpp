#include "clinchsim/scoring.hpp"

#include <array>
#include <cctype>
#include <limits>

namespace clinchsim {

namespace {

// Season totals are sums of at most this many races.
constexpr Int128 kMaxRacesPerSeason = 4096;

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

// Finite decimal when the denominator allows it, "n/d" otherwise.
std::string decimal_string(const Rational& r) {
    Int128 den = r.den();
    int twos = 0;
    int fives = 0;
    while (den % 2 == 0) den /= 2, ++twos;
    while (den % 5 == 0) den /= 5, ++fives;
    if (den != 1) return r.to_string();
    const int digits = std::max(twos, fives);
    Int128 pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    const Int128 scaled = r.num() * (pow10 / r.den());
    const bool neg = scaled < 0;
    std::string body = int128_to_string(neg ? -scaled : scaled);
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) body.insert(0, digits + 1 - body.size(), '0');
        body.insert(body.size() - digits, ".");
    }
    return neg ? "-" + body : body;
}

const std::array<std::pair<const char*, const char*>, 4> kGeometricAliases{{
    {"G1", "1"},
    {"G2", "1.05"},
    {"G3", "1.3"},
    {"G4", "1.6"},
}};

std::string geometric_name(const Rational& p) {
    for (auto [alias, value] : kGeometricAliases)
        if (Rational::parse(value) == p) return alias;
    return "G:" + decimal_string(p);
}

std::vector<Rational> integers(std::initializer_list<int> values) {
    return {values.begin(), values.end()};
}

}  // namespace

ScoringRule::ScoringRule(std::string name, std::vector<Rational> scores, std::optional<Rational> geometric_p)
    : name_(std::move(name)), scores_(std::move(scores)), p_(std::move(geometric_p)) {
    if (scores_.empty()) throw ValidationError("a scoring rule needs at least one scored place");
    if (scores_.front() <= Rational(0)) throw ValidationError("the score of first place must be positive");
    for (std::size_t j = 0; j < scores_.size(); ++j) {
        if (scores_[j] < Rational(0)) throw ValidationError("scores must be non-negative");
        if (j + 1 < scores_.size() && scores_[j] < scores_[j + 1])
            throw ValidationError("scores must be non-increasing (place " + std::to_string(j + 1) + " scores less than place " +
                                  std::to_string(j + 2) + ")");
    }
    if (p_ && *p_ <= Rational(0)) throw ValidationError("geometric parameter must be positive");

    try {
        for (const auto& s : scores_) scale_ = checked_mul(scale_ / gcd128(scale_, s.den()), s.den());
        scaled_.reserve(scores_.size());
        for (const auto& s : scores_) scaled_.push_back(checked_mul(s.num(), scale_ / s.den()));
        (void)checked_mul(scaled_.front(), kMaxRacesPerSeason);
    } catch (const OverflowError&) {
        throw ValidationError("scores of rule '" + name_ + "' need more precision than exact season totals support");
    }
}

std::string ScoringRule::to_spec() const {
    if (p_ && static_cast<int>(scores_.size()) == 10) return "G:" + decimal_string(*p_);
    for (auto preset : {Preset::S1, Preset::S2, Preset::S3, Preset::S4, Preset::M1993}) {
        ScoringRule r = preset_rule(preset);
        if (r.name_ == name_ && r.scores_ == scores_) return name_;
    }
    std::string out = "V:";
    for (std::size_t j = 0; j < scores_.size(); ++j) {
        if (j) out += ',';
        out += decimal_string(scores_[j]);
    }
    return out;
}

ScoringRule preset_rule(Preset preset) {
    switch (preset) {
        case Preset::S1: return {"S1", integers({9, 6, 4, 3, 2, 1, 0, 0, 0, 0})};
        case Preset::S2: return {"S2", integers({10, 6, 4, 3, 2, 1, 0, 0, 0, 0})};
        case Preset::S3: return {"S3", integers({10, 8, 6, 5, 4, 3, 2, 1, 0, 0})};
        case Preset::S4: return {"S4", integers({25, 18, 15, 12, 10, 8, 6, 4, 2, 1})};
        case Preset::M1993: return {"M1993", integers({25, 20, 16, 13, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1})};
    }
    throw std::logic_error("unhandled preset");
}

ScoringRule preset_rule(std::string_view name) {
    const std::string key = upper(trim(name));
    if (key == "S1") return preset_rule(Preset::S1);
    if (key == "S2") return preset_rule(Preset::S2);
    if (key == "S3") return preset_rule(Preset::S3);
    if (key == "S4") return preset_rule(Preset::S4);
    if (key == "M1993") return preset_rule(Preset::M1993);
    throw ValidationError("unknown preset rule '" + std::string(name) + "'");
}

ScoringRule geometric_rule(const Rational& p, int places) {
    if (p <= Rational(0)) throw ValidationError("geometric parameter p must be > 0");
    if (places < 1) throw ValidationError("a geometric rule needs at least one scored place");
    // s_L = 1 and s_j = s_{j+1} + p^(L-j); built from the bottom place up.
    std::vector<Rational> scores(static_cast<std::size_t>(places));
    Rational power(1);
    Rational running(0);
    try {
        for (int j = places; j >= 1; --j) {
            running += power;
            scores[static_cast<std::size_t>(j - 1)] = running;
            if (j > 1) power *= p;
        }
    } catch (const OverflowError&) {
        throw ValidationError("geometric parameter " + decimal_string(p) + " needs more precision than supported");
    }
    std::string name = places == 10 ? geometric_name(p) : "G:" + decimal_string(p) + "/" + std::to_string(places);
    return {std::move(name), std::move(scores), p};
}

ScoringRule custom_rule(std::vector<Rational> scores, std::string name) {
    if (name.empty()) {
        name = "V:";
        for (std::size_t j = 0; j < scores.size(); ++j) {
            if (j) name += ',';
            name += decimal_string(scores[j]);
        }
    }
    return {std::move(name), std::move(scores)};
}

ScoringRule parse_rule_spec(std::string_view spec) {
    const std::string text = trim(spec);
    const std::string key = upper(text);
    if (key.starts_with("G:")) {
        Rational p;
        try {
            p = Rational::parse(std::string_view(text).substr(2));
        } catch (const std::invalid_argument&) {
            throw ValidationError("bad geometric parameter in rule spec '" + text + "'");
        }
        return geometric_rule(p);
    }
    if (key.starts_with("V:")) {
        std::vector<Rational> scores;
        std::string_view rest = std::string_view(text).substr(2);
        while (true) {
            auto comma = rest.find(',');
            std::string_view item = rest.substr(0, comma);
            try {
                scores.push_back(Rational::parse(item));
            } catch (const std::invalid_argument&) {
                throw ValidationError("bad score '" + std::string(item) + "' in rule spec '" + text + "'");
            }
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        return custom_rule(std::move(scores));
    }
    for (auto [alias, value] : kGeometricAliases)
        if (key == alias) return geometric_rule(Rational::parse(value));
    try {
        return preset_rule(key);
    } catch (const ValidationError&) {
        throw ValidationError("unknown rule spec '" + text + "' (expected S1|S2|S3|S4|M1993|G:<p>|V:<v1,v2,...>)");
    }
}

std::vector<ScoringRule> parse_rule_list(std::string_view list) {
    std::vector<std::string> items;
    std::string current;
    auto flush = [&] {
        if (!trim(current).empty()) items.push_back(trim(current));
        current.clear();
    };
    std::size_t start = 0;
    while (start <= list.size()) {
        auto end = list.find_first_of(",;", start);
        if (end == std::string_view::npos) end = list.size();
        const std::string token = trim(list.substr(start, end - start));
        const char sep = end < list.size() ? list[end] : '\0';
        const bool continues_vector = !current.empty() && upper(current).starts_with("V:") && !token.empty() &&
                                      (std::isdigit(static_cast<unsigned char>(token.front())) || token.front() == '.');
        if (continues_vector) {
            current += "," + token;
        } else {
            flush();
            current = token;
        }
        if (sep == ';') flush();
        start = end + 1;
    }
    flush();
    if (items.empty()) throw ValidationError("no rules given");
    std::vector<ScoringRule> rules;
    rules.reserve(items.size());
    for (const auto& item : items) rules.push_back(parse_rule_spec(item));
    return rules;
}

std::vector<ScoringRule> standard_rules() {
    return {preset_rule(Preset::S1), preset_rule(Preset::S2), preset_rule(Preset::S3), preset_rule(Preset::S4),
            parse_rule_spec("G1"),   parse_rule_spec("G2"),   parse_rule_spec("G3"),   parse_rule_spec("G4")};
}

Rational points_for(const ScoringRule& rule, Position position) {
    if (!position.is_classified()) return Rational(0);
    const auto place = static_cast<std::size_t>(position.place());
    if (place > rule.scored_places()) return Rational(0);
    return rule.scores()[place - 1];
}

std::vector<Rational> normalize_to_100(const ScoringRule& rule) {
    std::vector<Rational> out;
    out.reserve(rule.scored_places());
    const Rational factor = Rational(100) / rule.first_place_score();
    for (const auto& s : rule.scores()) out.push_back(s * factor);
    return out;
}

}  // namespace clinchsim
