#include "clinchsim/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "clinchsim/evaluate.hpp"
#include "clinchsim/scoring.hpp"

#ifndef CLINCHSIM_DEFAULT_DATA_DIR
#define CLINCHSIM_DEFAULT_DATA_DIR "data"
#endif

namespace clinchsim {

namespace {

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

int parse_int(const std::string& text, const char* what, std::size_t line_no) {
    int value = 0;
    std::size_t used = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size())
        throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" + text + "'");
    return value;
}

// Non-empty, non-comment lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> data_lines(std::istream& in) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        out.emplace_back(line_no, t);
    }
    return out;
}

void expect_header(const std::vector<std::pair<std::size_t, std::string>>& lines, const std::vector<std::string>& header) {
    if (lines.empty()) throw ValidationError("empty dataset");
    std::vector<std::string> got = split_csv_line(lines.front().second);
    for (auto& h : got)
        for (char& c : h) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (got != header) {
        std::string want;
        for (const auto& h : header) want += (want.empty() ? "" : ",") + h;
        throw ParseError("line " + std::to_string(lines.front().first) + ": expected header '" + want + "'");
    }
}

std::ifstream open_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path.string() + "'");
    return in;
}

std::string rational_text(const Rational& r) { return r.to_string(); }

}  // namespace

Dataset load_dataset(const std::filesystem::path& path, const LoadOptions& options) {
    std::ifstream in = open_file(path);
    LoadOptions opts = options;
    if (opts.name.empty()) opts.name = path.stem().string();
    return parse_dataset(in, opts);
}

Dataset parse_dataset(std::istream& in, const LoadOptions& options) {
    const auto lines = data_lines(in);
    expect_header(lines, {"season", "race", "driver", "position"});

    // (season, race) -> driver -> position
    std::map<std::pair<int, int>, std::map<int, Position>> races;
    std::map<int, int> season_drivers;
    const std::set<int> keep(options.seasons.begin(), options.seasons.end());

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [line_no, text] = lines[i];
        const auto fields = split_csv_line(text);
        if (fields.size() != 4)
            throw ParseError("line " + std::to_string(line_no) + ": expected 4 fields, got " + std::to_string(fields.size()));
        const int season = parse_int(fields[0], "season", line_no);
        const int race = parse_int(fields[1], "race number", line_no);
        const int driver = parse_int(fields[2], "driver", line_no);
        if (race < 1) throw ParseError("line " + std::to_string(line_no) + ": race numbers start at 1");
        if (driver < 1) throw ParseError("line " + std::to_string(line_no) + ": driver indices start at 1");
        Position pos;
        std::string upper = fields[3];
        for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (upper != "DNF") {
            const int place = parse_int(fields[3], "position", line_no);
            if (place < 1) throw ParseError("line " + std::to_string(line_no) + ": positions start at 1");
            pos = Position::classified(place);
        }
        if (!keep.empty() && !keep.contains(season)) continue;
        auto& entries = races[{season, race}];
        if (!entries.emplace(driver, pos).second)
            throw ValidationError("line " + std::to_string(line_no) + ": driver " + std::to_string(driver) +
                                  " listed twice in season " + std::to_string(season) + " race " + std::to_string(race));
        season_drivers[season] = std::max(season_drivers[season], driver);
    }
    if (races.empty()) throw ValidationError("empty dataset");

    std::size_t driver_count = 0;
    for (auto [season, drivers] : season_drivers) driver_count = std::max(driver_count, static_cast<std::size_t>(drivers));
    if (options.driver_count_override) {
        if (*options.driver_count_override < driver_count)
            throw ValidationError("driver count override " + std::to_string(*options.driver_count_override) +
                                  " is below the largest field " + std::to_string(driver_count));
        driver_count = *options.driver_count_override;
    }

    Dataset ds;
    ds.name = options.name;
    ds.driver_count = driver_count;
    for (const auto& [key, entries] : races) {
        const auto [season, race] = key;
        std::vector<Position> positions(driver_count);
        for (auto [driver, pos] : entries) positions[static_cast<std::size_t>(driver - 1)] = pos;
        try {
            ds.races.push_back(options.partial ? RaceResult::partial(std::move(positions), season)
                                               : RaceResult(std::move(positions), season));
        } catch (const ValidationError& e) {
            throw ValidationError("season " + std::to_string(season) + " race " + std::to_string(race) + ": " + e.what());
        }
        if (ds.seasons.empty() || ds.seasons.back() != season) ds.seasons.push_back(season);
    }
    ds.validate();
    return ds;
}

void write_dataset_csv(std::ostream& out, const Dataset& dataset) {
    out << "season,race,driver,position\n";
    std::map<int, int> race_no;
    for (const auto& race : dataset.races) {
        const int season = race.source_season().value_or(0);
        const int number = ++race_no[season];
        const auto positions = race.positions();
        for (std::size_t d = 0; d < positions.size(); ++d)
            if (positions[d].is_classified())
                out << season << ',' << number << ',' << d + 1 << ',' << positions[d].place() << '\n';
    }
}

std::vector<int> builtin_seasons(BuiltinDataset which) {
    switch (which) {
        case BuiltinDataset::standard: return {2010, 2011, 2012, 2013, 2014, 2015, 2016, 2017, 2018, 2019};
        case BuiltinDataset::small_margin: return {2007, 2008, 2009, 2010, 2012, 2016};
    }
    throw std::logic_error("unhandled builtin dataset");
}

std::string builtin_name(BuiltinDataset which) {
    return which == BuiltinDataset::standard ? "standard" : "small-margin";
}

std::optional<BuiltinDataset> parse_builtin_name(std::string_view name) {
    if (name == "standard") return BuiltinDataset::standard;
    if (name == "small-margin" || name == "small_margin") return BuiltinDataset::small_margin;
    return std::nullopt;
}

Dataset builtin_dataset(BuiltinDataset which) {
    const auto path = f1_races_path();
    if (!std::filesystem::exists(path)) throw DataError("missing fixture '" + path.string() + "'");
    LoadOptions opts;
    opts.seasons = builtin_seasons(which);
    opts.name = builtin_name(which);
    return load_dataset(path, opts);
}

namespace {
std::filesystem::path& data_dir_override() {
    static std::filesystem::path dir;
    return dir;
}
}  // namespace

void set_data_dir(std::filesystem::path dir) { data_dir_override() = std::move(dir); }

std::filesystem::path data_dir() {
    if (!data_dir_override().empty()) return data_dir_override();
    if (const char* env = std::getenv("CLINCHSIM_DATA_DIR"); env && *env) return env;
    return CLINCHSIM_DEFAULT_DATA_DIR;
}

std::filesystem::path f1_races_path() { return data_dir() / "f1" / "races_2007_2019.csv"; }

std::filesystem::path reference_table_path() { return data_dir() / "reference" / "f1_seasons.csv"; }

std::vector<std::string> history_fixture_names() { return {"f1-2002", "gp125-1999", "motogp-2020"}; }

std::filesystem::path history_fixture_path(std::string_view name) {
    const auto names = history_fixture_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw DataError("unknown fixture '" + std::string(name) + "'");
    return data_dir() / "history" / (std::string(name) + ".csv");
}

Dataset resolve_dataset(std::string_view name_or_path) {
    if (auto builtin = parse_builtin_name(name_or_path)) return builtin_dataset(*builtin);
    const std::filesystem::path path{std::string(name_or_path)};
    if (!std::filesystem::exists(path))
        throw DataError("no builtin dataset or file named '" + std::string(name_or_path) + "'");
    return load_dataset(path);
}

std::vector<ReferenceRow> load_reference(const std::filesystem::path& path) {
    std::ifstream in = open_file(path);
    const auto lines = data_lines(in);
    const std::vector<std::string> base = {"season", "drivers", "races", "clinched", "margin", "margin_checkable"};
    std::vector<std::string> with_rule = base;
    with_rule.push_back("rule");
    bool has_rule = false;
    try {
        expect_header(lines, with_rule);
        has_rule = true;
    } catch (const ParseError&) {
        expect_header(lines, base);
    }
    const std::size_t columns = base.size() + (has_rule ? 1 : 0);
    std::vector<ReferenceRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [line_no, text] = lines[i];
        const auto f = split_csv_line(text);
        if (f.size() != columns)
            throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(columns) + " fields");
        ReferenceRow row;
        row.season = parse_int(f[0], "season", line_no);
        row.drivers = parse_int(f[1], "drivers", line_no);
        row.races = parse_int(f[2], "races", line_no);
        row.clinched = parse_int(f[3], "clinched", line_no);
        try {
            row.margin = Rational::parse(f[4]);
        } catch (const std::invalid_argument&) {
            throw ParseError("line " + std::to_string(line_no) + ": bad margin '" + f[4] + "'");
        }
        if (f[5] == "true" || f[5] == "1")
            row.margin_checkable = true;
        else if (f[5] == "false" || f[5] == "0")
            row.margin_checkable = false;
        else
            throw ParseError("line " + std::to_string(line_no) + ": margin_checkable must be true or false");
        if (has_rule && !f[6].empty()) {
            try {
                row.rule = parse_rule_spec(f[6]).to_spec();
            } catch (const ValidationError& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        if (row.clinched > row.races) throw ValidationError("line " + std::to_string(line_no) + ": clinched exceeds races");
        if (row.margin < Rational(0)) throw ValidationError("line " + std::to_string(line_no) + ": negative margin");
        rows.push_back(row);
    }
    return rows;
}

std::size_t ValidationReport::mismatch_count() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const ValidationEntry& e) {
        return e.status == ValidationEntry::Status::mismatch;
    }));
}

SeasonOutcome season_outcome(const Dataset& dataset, int season) {
    auto races = dataset.season_races(season);
    if (races.empty()) throw DataError("season " + std::to_string(season) + " is not in dataset '" + dataset.name + "'");
    return SeasonOutcome(std::move(races));
}

ValidationReport validate_against_reference(const Dataset& dataset, const std::vector<ReferenceRow>& reference) {
    using Status = ValidationEntry::Status;
    ValidationReport report;
    auto add = [&](int season, std::string field, const std::string& expected, const std::string& actual, std::string note = {}) {
        report.entries.push_back({season, std::move(field), expected, actual, expected == actual ? Status::match : Status::mismatch,
                                  std::move(note)});
    };
    for (const auto& row : reference) {
        const auto races = dataset.season_races(row.season);
        if (races.empty()) {
            add(row.season, "season", "present", "missing");
            continue;
        }
        std::set<std::size_t> top_ten;
        for (const auto& race : races) {
            const auto positions = race.positions();
            for (std::size_t d = 0; d < positions.size(); ++d)
                if (positions[d].is_classified() && positions[d].place() <= 10) top_ten.insert(d);
        }
        add(row.season, "drivers", std::to_string(row.drivers), std::to_string(top_ten.size()));
        add(row.season, "races", std::to_string(row.races), std::to_string(races.size()));

        if (!row.margin_checkable) {
            for (const char* field : {"clinched", "margin"})
                report.entries.push_back({row.season, field, field == std::string("clinched") ? std::to_string(row.clinched)
                                                                                               : rational_text(row.margin),
                                          "", Status::skipped, "skipped (special scoring)"});
            continue;
        }
        const ScoringRule rule = parse_rule_spec(row.rule);
        const SeasonOutcome season(races);
        const SeasonTable table(season);
        RngStream lots(0, 0);
        const DriverId champ = table.champion(rule, lots);
        add(row.season, "clinched", std::to_string(row.clinched), std::to_string(table.clinch_index(rule, champ)));

        const auto standings = score_season(season, rule);
        Rational best_other;
        bool first = true;
        for (const auto& s : standings)
            if (s.driver != champ && (first || s.points > best_other)) {
                best_other = s.points;
                first = false;
            }
        const Rational margin = standings[champ.index()].points - (first ? Rational(0) : best_other);
        add(row.season, "margin", rational_text(row.margin), rational_text(margin));
    }
    return report;
}

}  // namespace clinchsim
