#include "jointrank/report_io.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "jointrank/csv.hpp"
#include "jointrank/errors.hpp"
#include "jointrank/version.hpp"

namespace jointrank {

namespace {

using nlohmann::json;

std::string fixed5(double v) {
    if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
    std::ostringstream os;
    os << std::fixed << std::setprecision(5) << v;
    return os.str();
}

std::string full(double v) {
    if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

json number_or_null(double v) {
    if (std::isinf(v) || std::isnan(v)) return nullptr;
    return v;
}

json report_to_json(const TestReport& report) {
    json rows = json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"effect", effect_kind_name(r.kind)},
                        {"hypothesis", r.hypothesis},
                        {"estimate", r.estimate},
                        {"std_error", r.std_error},
                        {"statistic", r.statistic},
                        {"p_adjusted", r.p_adjusted}});
    }
    json sci = json::array();
    for (const auto& ci : report.sci) {
        sci.push_back({{"label", ci.label},
                       {"lower", number_or_null(ci.lower)},
                       {"upper", number_or_null(ci.upper)}});
    }
    return json{{"version", kVersion},
                {"seed", report.seed},
                {"alternative", alternative_name(report.alternative)},
                {"level", report.level},
                {"df", number_or_null(report.df)},
                {"critical_value", report.critical_value},
                {"global_p", report.global_p},
                {"rows", rows},
                {"sci", sci}};
}

}  // namespace

OutputFormat output_format_from_name(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw ValidationError("unknown output format: " + name);
}

void render_test_report(const TestReport& report, OutputFormat format, std::ostream& out) {
    switch (format) {
        case OutputFormat::json:
            out << report_to_json(report).dump(2) << '\n';
            return;
        case OutputFormat::csv: {
            csv::write_row(out, {"effect", "hypothesis", "estimate", "std_error", "statistic",
                                 "p_adjusted"});
            for (const auto& r : report.rows)
                csv::write_row(out, {effect_kind_name(r.kind), r.hypothesis, full(r.estimate),
                                     full(r.std_error), full(r.statistic), full(r.p_adjusted)});
            return;
        }
        case OutputFormat::text: {
            out << std::left << std::setw(10) << "effect" << std::setw(14) << "hypothesis"
                << std::right << std::setw(12) << "estimate" << std::setw(12) << "std.error"
                << std::setw(12) << "statistic" << std::setw(12) << "p.adj" << '\n';
            for (const auto& r : report.rows) {
                out << std::left << std::setw(10) << effect_kind_name(r.kind) << std::setw(14)
                    << r.hypothesis << std::right << std::setw(12) << fixed5(r.estimate)
                    << std::setw(12) << fixed5(r.std_error) << std::setw(12)
                    << fixed5(r.statistic) << std::setw(12) << fixed5(r.p_adjusted) << '\n';
            }
            out << "global p-value: " << fixed5(report.global_p)
                << "   df: " << (std::isinf(report.df) ? std::string("Inf") : full(report.df))
                << "   alternative: " << alternative_name(report.alternative) << '\n';
            out << "critical value (" << fixed5(report.level) << "): "
                << fixed5(report.critical_value) << '\n';
            if (!report.sci.empty()) {
                out << "simultaneous confidence limits (location block):\n";
                for (const auto& ci : report.sci)
                    out << "  " << std::left << std::setw(14) << ci.label << std::right
                        << std::setw(12) << fixed5(ci.lower) << std::setw(12) << fixed5(ci.upper)
                        << '\n';
            }
            return;
        }
    }
}

void render_kw(const KwResult& kw, std::uint64_t seed, OutputFormat format, std::ostream& out) {
    switch (format) {
        case OutputFormat::json: {
            json j{{"version", kVersion},
                   {"seed", seed},
                   {"statistic", kw.statistic},
                   {"df", kw.df},
                   {"p_asymptotic", kw.p_asymptotic},
                   {"permutations_used", kw.permutations_used}};
            j["p_permutation"] = kw.p_permutation ? json(*kw.p_permutation) : json(nullptr);
            out << j.dump(2) << '\n';
            return;
        }
        case OutputFormat::csv:
            csv::write_row(out, {"statistic", "df", "p_asymptotic", "p_permutation",
                                 "permutations_used"});
            csv::write_row(out, {full(kw.statistic), full(kw.df), full(kw.p_asymptotic),
                                 kw.p_permutation ? full(*kw.p_permutation) : "",
                                 std::to_string(kw.permutations_used)});
            return;
        case OutputFormat::text:
            out << "Kruskal-Wallis statistic: " << fixed5(kw.statistic) << "  (df "
                << full(kw.df) << ")\n";
            out << "asymptotic p-value:       " << fixed5(kw.p_asymptotic) << '\n';
            if (kw.p_permutation)
                out << "permutation p-value:      " << fixed5(*kw.p_permutation) << "  ("
                    << kw.permutations_used << " permutations)\n";
            return;
    }
}

void render_mctp(const RelEffectResult& res, Alternative alt, double level, std::uint64_t seed,
                 OutputFormat format, std::ostream& out) {
    switch (format) {
        case OutputFormat::json: {
            json rows = json::array();
            for (std::size_t i = 0; i < res.labels.size(); ++i)
                rows.push_back({{"hypothesis", res.labels[i]},
                                {"estimate", res.contrast_estimates[i]},
                                {"std_error", res.std_errors[i]},
                                {"statistic", res.statistics[i]},
                                {"p_adjusted", res.p_adjusted[i]}});
            json j{{"version", kVersion},
                   {"seed", seed},
                   {"alternative", alternative_name(alt)},
                   {"level", level},
                   {"df", res.df},
                   {"effects", res.effects},
                   {"global_p", res.global_p},
                   {"rows", rows}};
            out << j.dump(2) << '\n';
            return;
        }
        case OutputFormat::csv:
            csv::write_row(out, {"hypothesis", "estimate", "std_error", "statistic",
                                 "p_adjusted"});
            for (std::size_t i = 0; i < res.labels.size(); ++i)
                csv::write_row(out, {res.labels[i], full(res.contrast_estimates[i]),
                                     full(res.std_errors[i]), full(res.statistics[i]),
                                     full(res.p_adjusted[i])});
            return;
        case OutputFormat::text:
            out << "relative effects:";
            for (double e : res.effects) out << ' ' << fixed5(e);
            out << '\n';
            out << std::left << std::setw(14) << "hypothesis" << std::right << std::setw(12)
                << "estimate" << std::setw(12) << "std.error" << std::setw(12) << "statistic"
                << std::setw(12) << "p.adj" << '\n';
            for (std::size_t i = 0; i < res.labels.size(); ++i)
                out << std::left << std::setw(14) << res.labels[i] << std::right << std::setw(12)
                    << fixed5(res.contrast_estimates[i]) << std::setw(12)
                    << fixed5(res.std_errors[i]) << std::setw(12) << fixed5(res.statistics[i])
                    << std::setw(12) << fixed5(res.p_adjusted[i]) << '\n';
            out << "global p-value: " << fixed5(res.global_p) << "   df: " << fixed5(res.df)
                << "   alternative: " << alternative_name(alt) << '\n';
            return;
    }
}

void render_scores(const Dataset& ds, const ScoreSet& scores, OutputFormat format,
                   std::ostream& out) {
    if (format == OutputFormat::json) {
        json rows = json::array();
        for (std::size_t i = 0; i < ds.size(); ++i)
            rows.push_back({{"value", ds.values()[i]},
                            {"group", ds.group_labels()[ds.group_index()[i]]},
                            {"midrank", scores.midrank[i]},
                            {"ansari", scores.ansari[i]},
                            {"savage", scores.savage[i]}});
        out << json{{"version", kVersion}, {"rows", rows}}.dump(2) << '\n';
        return;
    }
    // text and csv share the tabular layout
    csv::write_row(out, {"value", "group", "midrank", "ansari", "savage"});
    for (std::size_t i = 0; i < ds.size(); ++i)
        csv::write_row(out, {full(ds.values()[i]), ds.group_labels()[ds.group_index()[i]],
                             full(scores.midrank[i]), full(scores.ansari[i]),
                             full(scores.savage[i])});
}

namespace {

json scenario_to_json(const ScenarioConfig& cfg) {
    json j{{"name", cfg.name},
           {"k", cfg.k},
           {"n_per_group", cfg.n_per_group},
           {"alpha", cfg.alpha},
           {"n_replicates", cfg.n_replicates},
           {"seed", cfg.seed},
           {"kw_permutations", cfg.kw_permutations},
           {"mvt_accuracy", cfg.mvt_accuracy},
           {"df_policy", cfg.df_policy == DfPolicy::paper
                             ? "paper"
                             : (cfg.df_policy == DfPolicy::residual ? "residual" : "asymptotic")},
           {"location_shift", cfg.location_shift},
           {"scale_multiplier", cfg.scale_multiplier}};
    if (cfg.fleishman)
        j["fleishman"] = {{"skewness", cfg.fleishman->first},
                          {"excess_kurtosis", cfg.fleishman->second}};
    else
        j["fleishman"] = nullptr;
    return j;
}

}  // namespace

void render_power_report(const PowerReport& report, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::json) {
        json tests = json::array();
        for (const auto& t : report.tests)
            tests.push_back({{"test", test_id_name(t.id)},
                             {"rejections", t.rejections},
                             {"failures", t.failures},
                             {"proportion", t.proportion},
                             {"mc_se", t.mc_se}});
        out << json{{"version", kVersion},
                    {"scenario", scenario_to_json(report.scenario)},
                    {"tests", tests}}
                   .dump(2)
            << '\n';
        return;
    }
    if (format == OutputFormat::text) {
        out << "scenario: " << report.scenario.name << "  (k=" << report.scenario.k
            << ", n=" << report.scenario.n_per_group << ", replicates="
            << report.scenario.n_replicates << ", alpha=" << report.scenario.alpha
            << ", seed=" << report.scenario.seed << ")\n";
        for (const auto& t : report.tests)
            out << "  " << std::left << std::setw(8) << test_id_name(t.id) << " rejection "
                << fixed5(t.proportion) << " +- " << fixed5(t.mc_se)
                << (t.failures ? "  failures " + std::to_string(t.failures) : "") << '\n';
        return;
    }
    // CSV: scenario echoed in comment lines to keep one tabular block per run
    out << "# scenario=" << scenario_to_json(report.scenario).dump() << '\n';
    csv::write_row(out, {"test", "rejections", "failures", "replicates", "proportion", "mc_se"});
    for (const auto& t : report.tests)
        csv::write_row(out, {test_id_name(t.id), std::to_string(t.rejections),
                             std::to_string(t.failures),
                             std::to_string(report.scenario.n_replicates), full(t.proportion),
                             full(t.mc_se)});
}

void export_ci_plotdata(const TestReport& report, std::ostream& out) {
    if (report.sci.empty())
        throw ValidationError("export_ci_plotdata: report carries no confidence limits");
    csv::write_row(out, {"label", "estimate", "lower", "upper"});
    for (const auto& ci : report.sci) {
        double estimate = 0.0;
        for (const auto& row : report.rows)
            if (row.hypothesis == ci.label && row.kind == EffectKind::location)
                estimate = row.estimate;
        csv::write_row(out, {ci.label, full(estimate),
                             std::isinf(ci.lower) ? "" : full(ci.lower),
                             std::isinf(ci.upper) ? "" : full(ci.upper)});
    }
}

ScenarioConfig scenario_from_json_stream(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("scenario JSON: ") + e.what(), 0);
    }
    ScenarioConfig cfg;
    try {
        if (j.contains("name")) cfg.name = j["name"].get<std::string>();
        if (j.contains("k")) cfg.k = j["k"].get<std::size_t>();
        if (j.contains("n_per_group")) cfg.n_per_group = j["n_per_group"].get<std::size_t>();
        if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
        if (j.contains("n_replicates")) cfg.n_replicates = j["n_replicates"].get<std::size_t>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("kw_permutations"))
            cfg.kw_permutations = j["kw_permutations"].get<std::size_t>();
        if (j.contains("mvt_accuracy")) cfg.mvt_accuracy = j["mvt_accuracy"].get<double>();
        if (j.contains("df_policy")) {
            const std::string p = j["df_policy"].get<std::string>();
            if (p == "paper") cfg.df_policy = DfPolicy::paper;
            else if (p == "residual") cfg.df_policy = DfPolicy::residual;
            else if (p == "asymptotic") cfg.df_policy = DfPolicy::asymptotic;
            else throw ValidationError("scenario: unknown df_policy " + p);
        }
        if (j.contains("location_shift") && !j["location_shift"].is_null())
            cfg.location_shift = j["location_shift"].get<std::vector<double>>();
        if (j.contains("scale_multiplier") && !j["scale_multiplier"].is_null())
            cfg.scale_multiplier = j["scale_multiplier"].get<std::vector<double>>();
        if (j.contains("fleishman") && !j["fleishman"].is_null()) {
            cfg.fleishman = std::make_pair(j["fleishman"]["skewness"].get<double>(),
                                           j["fleishman"]["excess_kurtosis"].get<double>());
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("scenario JSON: ") + e.what(), 0);
    }
    return cfg;
}

std::string scenario_to_json_string(const ScenarioConfig& cfg) {
    return scenario_to_json(cfg).dump(2);
}

}  // namespace jointrank
