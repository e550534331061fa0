#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clinchsim/types.hpp"

namespace clinchsim {

/// Malformed input file (bad header, bad field, wrong column count).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Missing fixture or unreadable file.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LoadOptions {
    /// Pad every race to this many drivers instead of the largest season's field.
    std::optional<std::size_t> driver_count_override;
    /// Keep only these seasons (all when empty).
    std::vector<int> seasons;
    /// Accept excerpts whose classified places have gaps (printed standings tables).
    bool partial = false;
    /// Name recorded in the Dataset; defaults to the file stem.
    std::string name;
};

/// Reads a `season,race,driver,position` CSV. Rows for unclassified drivers may
/// be omitted; `position` is a positive integer or `DNF`. Races come back
/// ordered by (season, race number), padded to a common driver count.
Dataset load_dataset(const std::filesystem::path& path, const LoadOptions& options = {});
Dataset parse_dataset(std::istream& in, const LoadOptions& options = {});

/// Writes the CSV form read by load_dataset (unclassified rows omitted).
void write_dataset_csv(std::ostream& out, const Dataset& dataset);

enum class BuiltinDataset { standard, small_margin };

/// Seasons 2010-2019 (standard) or 2007, 2008, 2009, 2010, 2012, 2016 (small margin).
std::vector<int> builtin_seasons(BuiltinDataset which);
Dataset builtin_dataset(BuiltinDataset which);
/// Accepts "standard", "small-margin" / "small_margin".
std::optional<BuiltinDataset> parse_builtin_name(std::string_view name);
std::string builtin_name(BuiltinDataset which);

/// Fixture directory: the one passed to set_data_dir(), else $CLINCHSIM_DATA_DIR,
/// else the directory configured at build time.
std::filesystem::path data_dir();
void set_data_dir(std::filesystem::path dir);
/// All bundled Formula One seasons (2007-2019) in one file.
std::filesystem::path f1_races_path();
std::filesystem::path reference_table_path();
/// Historical excerpt fixtures: "f1-2002", "gp125-1999", "motogp-2020".
std::filesystem::path history_fixture_path(std::string_view name);
std::vector<std::string> history_fixture_names();

/// Builtin name or CSV path.
Dataset resolve_dataset(std::string_view name_or_path);

/// Published per-season summary used to check a reconstruction.
struct ReferenceRow {
    int season = 0;
    int drivers = 0;
    int races = 0;
    int clinched = 0;
    Rational margin;
    /// False for seasons whose official points no preset reproduces
    /// (half points, double points, bonus points).
    bool margin_checkable = true;
    /// Rule matching the season's official points; optional last CSV column.
    std::string rule = "S4";
};

std::vector<ReferenceRow> load_reference(const std::filesystem::path& path);

struct ValidationEntry {
    int season = 0;
    std::string field;
    std::string expected;
    std::string actual;
    enum class Status { match, mismatch, skipped } status = Status::match;
    std::string note;
};

struct ValidationReport {
    std::vector<ValidationEntry> entries;

    [[nodiscard]] std::size_t mismatch_count() const;
    [[nodiscard]] bool ok() const { return mismatch_count() == 0; }
};

/// Per season: number of drivers with a top-ten finish, number of races, and,
/// for checkable rows, the clinch race and champion's final margin under the row's rule.
ValidationReport validate_against_reference(const Dataset& dataset, const std::vector<ReferenceRow>& reference);

/// Races of one season, in order.
SeasonOutcome season_outcome(const Dataset& dataset, int season);

}  // namespace clinchsim
