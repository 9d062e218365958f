#pragma once

#include <iosfwd>
#include <string>

#include "jointrank/classical.hpp"
#include "jointrank/dataset.hpp"
#include "jointrank/maxt.hpp"
#include "jointrank/power_study.hpp"
#include "jointrank/scores.hpp"

namespace jointrank {

enum class OutputFormat { text, csv, json };

OutputFormat output_format_from_name(const std::string& name);

// Text renders to 5 decimals; JSON carries full precision plus the seed and
// tool version and is the machine-readable source of truth.
void render_test_report(const TestReport& report, OutputFormat format, std::ostream& out);
void render_kw(const KwResult& kw, std::uint64_t seed, OutputFormat format, std::ostream& out);
void render_mctp(const RelEffectResult& res, Alternative alt, double level, std::uint64_t seed,
                 OutputFormat format, std::ostream& out);
void render_scores(const Dataset& ds, const ScoreSet& scores, OutputFormat format,
                   std::ostream& out);
void render_power_report(const PowerReport& report, OutputFormat format, std::ostream& out);

// CSV with columns label, estimate, lower, upper; one-sided infinite limits
// render as empty fields. Requires a report with confidence limits.
void export_ci_plotdata(const TestReport& report, std::ostream& out);

ScenarioConfig scenario_from_json_stream(std::istream& in);
std::string scenario_to_json_string(const ScenarioConfig& cfg);

}  // namespace jointrank
