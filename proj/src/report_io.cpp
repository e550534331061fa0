#include "clinchsim/report_io.hpp"

#include <fmt/format.h>

namespace clinchsim {

namespace {

const char* status_name(ValidationEntry::Status s) {
    switch (s) {
        case ValidationEntry::Status::match: return "match";
        case ValidationEntry::Status::mismatch: return "mismatch";
        case ValidationEntry::Status::skipped: return "skipped";
    }
    return "?";
}

}  // namespace

std::string format_double(double value) { return fmt::format("{}", value); }

void write_reports_csv(std::ostream& out, std::span<const ExperimentReport> reports) {
    out << kReportCsvHeader << '\n';
    for (const auto& report : reports) {
        const auto& c = report.config;
        for (const auto& row : report.rows) {
            out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", row.rule, report.dataset_name,
                               method_number(c.method), c.races_n, c.replications, c.master_seed,
                               c.risk_averse ? "true" : "false", format_double(row.mean_uninteresting),
                               format_double(row.se_mean_uninteresting), format_double(row.p_champion_no_win),
                               format_double(row.se_p_no_win), format_double(row.p_uninteresting_ge3),
                               format_double(row.se_ge3));
        }
    }
}

nlohmann::json reports_to_json(std::span<const ExperimentReport> reports) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& report : reports) {
        const auto& c = report.config;
        for (const auto& row : report.rows) {
            rows.push_back({
                {"rule", row.rule},
                {"dataset", report.dataset_name},
                {"method", method_number(c.method)},
                {"races", c.races_n},
                {"reps", c.replications},
                {"seed", c.master_seed},
                {"risk_averse", c.risk_averse},
                {"mean_uninteresting", row.mean_uninteresting},
                {"se_mean", row.se_mean_uninteresting},
                {"p_no_win", row.p_champion_no_win},
                {"se_p_no_win", row.se_p_no_win},
                {"p_ge3", row.p_uninteresting_ge3},
                {"se_p_ge3", row.se_ge3},
            });
        }
    }
    return rows;
}

nlohmann::json validation_to_json(const ValidationReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : report.entries)
        rows.push_back({{"season", e.season},
                        {"field", e.field},
                        {"expected", e.expected},
                        {"actual", e.actual},
                        {"status", status_name(e.status)},
                        {"note", e.note}});
    return {{"mismatches", report.mismatch_count()}, {"entries", rows}};
}

void write_validation_csv(std::ostream& out, const ValidationReport& report) {
    out << "season,field,expected,actual,status,note\n";
    for (const auto& e : report.entries)
        out << fmt::format("{},{},{},{},{},{}\n", e.season, e.field, e.expected, e.actual, status_name(e.status), e.note);
}

}  // namespace clinchsim
