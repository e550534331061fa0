#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "clinchsim/dataset.hpp"
#include "clinchsim/montecarlo.hpp"

namespace clinchsim {

enum class OutputFormat { csv, json };

/// `rule,dataset,method,races,reps,seed,risk_averse,mean_uninteresting,se_mean,p_no_win,se_p_no_win,p_ge3,se_p_ge3`
inline constexpr const char* kReportCsvHeader =
    "rule,dataset,method,races,reps,seed,risk_averse,mean_uninteresting,se_mean,p_no_win,se_p_no_win,p_ge3,se_p_ge3";

/// One CSV row per (report, rule); doubles in shortest round-trip form.
void write_reports_csv(std::ostream& out, std::span<const ExperimentReport> reports);
nlohmann::json reports_to_json(std::span<const ExperimentReport> reports);

nlohmann::json validation_to_json(const ValidationReport& report);
void write_validation_csv(std::ostream& out, const ValidationReport& report);

/// Shortest decimal string that reads back as the same double.
std::string format_double(double value);

}  // namespace clinchsim
