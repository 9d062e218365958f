#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jointrank/classical.hpp"
#include "jointrank/contrasts.hpp"
#include "jointrank/dataset.hpp"
#include "jointrank/errors.hpp"
#include "jointrank/kernels.hpp"
#include "jointrank/maxt.hpp"
#include "jointrank/power_study.hpp"
#include "jointrank/report_io.hpp"
#include "jointrank/scores.hpp"
#include "jointrank/version.hpp"

namespace {

using namespace jointrank;

struct CommonInput {
    std::string input;
    std::string value_column = "value";
    std::string group_column = "group";
    std::string group_order;
    std::string format = "text";
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonInput& ci) {
    cmd->add_option("--input", ci.input, "input CSV path")->required();
    cmd->add_option("--value", ci.value_column, "value column name");
    cmd->add_option("--group", ci.group_column, "group column name");
    cmd->add_option("--group-order", ci.group_order,
                    "comma-separated group order (first = control)");
    cmd->add_option("--format", ci.format, "output format: text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--out", ci.out_path, "write the report to this path instead of stdout");
}

Dataset load_dataset(const CommonInput& ci) {
    std::ifstream in(ci.input);
    if (!in) throw ValidationError("cannot open input file: " + ci.input);
    std::optional<std::vector<std::string>> order;
    if (!ci.group_order.empty()) {
        std::vector<std::string> labels;
        std::string cur;
        for (char c : ci.group_order) {
            if (c == ',') {
                labels.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        labels.push_back(cur);
        order = labels;
    }
    return Dataset::load_csv(in, ci.value_column, ci.group_column, order);
}

// Writes to --out or stdout; diagnostics always go to stderr.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ValidationError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

Alternative alternative_from(const std::string& s) {
    if (s == "two-sided") return Alternative::two_sided;
    if (s == "greater") return Alternative::greater;
    if (s == "less") return Alternative::less;
    throw ValidationError("unknown alternative: " + s);
}

DfPolicy df_policy_from(const std::string& s) {
    if (s == "paper") return DfPolicy::paper;
    if (s == "residual") return DfPolicy::residual;
    if (s == "asymptotic") return DfPolicy::asymptotic;
    throw ValidationError("unknown df policy: " + s);
}

ContrastMatrix contrast_from(const std::string& kind, const Dataset& ds) {
    if (kind == "grand-mean") return grand_mean_contrasts(ds.n_groups(), ds.group_labels());
    if (kind == "dunnett") return dunnett_contrasts(ds.n_groups(), ds.group_labels());
    throw ValidationError("unknown contrast kind: " + kind);
}

int dispatch(int argc, char** argv) {
    CLI::App app{"rank-score multiple contrast tests for one-way layouts"};
    app.set_version_flag("--version", std::string("jointrank ") + kVersion + " (kernels: " +
                                          kernels::backend_name(kernels::active_backend()) +
                                          ")");
    app.require_subcommand(1);

    // joint
    CommonInput joint_ci;
    std::string joint_contrast = "grand-mean", joint_alt = "two-sided", joint_df = "paper";
    double joint_level = 0.95, joint_accuracy = 1e-4;
    std::uint64_t joint_seed = 42;
    std::string joint_plotdata;
    auto* joint_cmd = app.add_subcommand(
        "joint", "joint double maximum test over location/scale/shape rank scores");
    add_common(joint_cmd, joint_ci);
    joint_cmd->add_option("--contrast", joint_contrast, "grand-mean|dunnett")
        ->check(CLI::IsMember({"grand-mean", "dunnett"}));
    joint_cmd->add_option("--alternative", joint_alt, "two-sided|greater|less")
        ->check(CLI::IsMember({"two-sided", "greater", "less"}));
    joint_cmd->add_option("--level", joint_level, "simultaneous confidence level");
    joint_cmd->add_option("--seed", joint_seed, "integration seed (default 42)");
    joint_cmd->add_option("--accuracy", joint_accuracy, "target absolute error of probabilities");
    joint_cmd->add_option("--df-policy", joint_df, "paper|residual|asymptotic")
        ->check(CLI::IsMember({"paper", "residual", "asymptotic"}));
    joint_cmd->add_option("--plot-data", joint_plotdata,
                          "also write confidence-limit plot data (CSV) to this path");

    // kw
    CommonInput kw_ci;
    std::size_t kw_perms = 10'000;
    bool kw_exhaustive = false, kw_asymptotic_only = false;
    std::uint64_t kw_seed = 42;
    auto* kw_cmd = app.add_subcommand("kw", "Kruskal-Wallis test with permutation p-value");
    add_common(kw_cmd, kw_ci);
    kw_cmd->add_option("--permutations", kw_perms, "random permutation count");
    kw_cmd->add_flag("--exhaustive", kw_exhaustive, "enumerate all distinct assignments");
    kw_cmd->add_flag("--asymptotic-only", kw_asymptotic_only, "skip the permutation p-value");
    kw_cmd->add_option("--seed", kw_seed, "permutation seed (default 42)");

    // mctp
    CommonInput mctp_ci;
    std::string mctp_contrast = "grand-mean", mctp_alt = "two-sided";
    double mctp_level = 0.95, mctp_accuracy = 1e-4;
    std::uint64_t mctp_seed = 42;
    auto* mctp_cmd =
        app.add_subcommand("mctp", "multiple contrast test for global-rank relative effects");
    add_common(mctp_cmd, mctp_ci);
    mctp_cmd->add_option("--contrast", mctp_contrast, "grand-mean|dunnett")
        ->check(CLI::IsMember({"grand-mean", "dunnett"}));
    mctp_cmd->add_option("--alternative", mctp_alt, "two-sided|greater|less")
        ->check(CLI::IsMember({"two-sided", "greater", "less"}));
    mctp_cmd->add_option("--level", mctp_level, "confidence level");
    mctp_cmd->add_option("--seed", mctp_seed, "integration seed (default 42)");
    mctp_cmd->add_option("--accuracy", mctp_accuracy, "target absolute error of probabilities");

    // scores
    CommonInput scores_ci;
    auto* scores_cmd =
        app.add_subcommand("scores", "emit mid-rank, scale and shape scores for a dataset");
    add_common(scores_cmd, scores_ci);

    // simulate
    std::string sim_scenario_path, sim_preset, sim_format = "csv", sim_out;
    std::string sim_tests = "joint,mctp,kw";
    std::uint64_t sim_seed = 0;
    std::size_t sim_replicates = 0;
    int sim_threads = 0;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo size/power study");
    sim_cmd->add_option("--scenario", sim_scenario_path, "scenario JSON file");
    sim_cmd->add_option("--preset", sim_preset,
                        "named scenario: normal-null, normal-location, normal-scale, "
                        "normal-location-scale, skewed-* analogues");
    sim_cmd->add_option("--replicates", sim_replicates, "override replicate count");
    sim_cmd->add_option("--seed", sim_seed, "override scenario seed");
    sim_cmd->add_option("--tests", sim_tests, "comma list from joint,mctp,kw");
    sim_cmd->add_option("--threads", sim_threads, "worker threads (0 = auto)");
    sim_cmd->add_option("--format", sim_format, "output format: text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sim_cmd->add_option("--out", sim_out, "write the report to this path instead of stdout");

    CLI11_PARSE(app, argc, argv);

    if (joint_cmd->parsed()) {
        const Dataset ds = load_dataset(joint_ci);
        JointOptions options;
        options.df_policy = df_policy_from(joint_df);
        options.accuracy = joint_accuracy;
        const TestReport report =
            joint_double_max_test(ds, contrast_from(joint_contrast, ds),
                                  alternative_from(joint_alt), joint_level, joint_seed, options);
        Sink sink(joint_ci.out_path);
        render_test_report(report, output_format_from_name(joint_ci.format), sink.stream());
        if (!joint_plotdata.empty()) {
            std::ofstream pd(joint_plotdata);
            if (!pd) throw ValidationError("cannot open plot-data path: " + joint_plotdata);
            export_ci_plotdata(report, pd);
        }
        return 0;
    }
    if (kw_cmd->parsed()) {
        const Dataset ds = load_dataset(kw_ci);
        std::optional<PermutationPlan> plan;
        if (!kw_asymptotic_only) plan = PermutationPlan{kw_perms, kw_seed, kw_exhaustive};
        const KwResult kw = kw_test(ds, plan);
        Sink sink(kw_ci.out_path);
        render_kw(kw, kw_seed, output_format_from_name(kw_ci.format), sink.stream());
        return 0;
    }
    if (mctp_cmd->parsed()) {
        const Dataset ds = load_dataset(mctp_ci);
        const RelEffectResult res =
            relative_effects_mctp(ds, contrast_from(mctp_contrast, ds),
                                  alternative_from(mctp_alt), mctp_level, mctp_seed,
                                  mctp_accuracy);
        Sink sink(mctp_ci.out_path);
        render_mctp(res, alternative_from(mctp_alt), mctp_level, mctp_seed,
                    output_format_from_name(mctp_ci.format), sink.stream());
        return 0;
    }
    if (scores_cmd->parsed()) {
        const Dataset ds = load_dataset(scores_ci);
        const ScoreSet s = compute_scores(ds.values());
        Sink sink(scores_ci.out_path);
        render_scores(ds, s, output_format_from_name(scores_ci.format), sink.stream());
        return 0;
    }
    if (sim_cmd->parsed()) {
        if (sim_scenario_path.empty() == sim_preset.empty())
            throw ValidationError("simulate: pass exactly one of --scenario or --preset");
        ScenarioConfig cfg;
        if (!sim_preset.empty()) {
            cfg = preset_scenario(sim_preset);
        } else {
            std::ifstream in(sim_scenario_path);
            if (!in) throw ValidationError("cannot open scenario file: " + sim_scenario_path);
            cfg = scenario_from_json_stream(in);
        }
        if (sim_replicates > 0) cfg.n_replicates = sim_replicates;
        if (sim_cmd->count("--seed")) cfg.seed = sim_seed;
        if (sim_threads > 0) cfg.threads = sim_threads;
        std::vector<TestId> tests;
        std::string cur;
        for (char c : sim_tests + ",") {
            if (c == ',') {
                if (!cur.empty()) tests.push_back(test_id_from_name(cur));
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        const PowerReport report = run_power_study(cfg, tests);
        Sink sink(sim_out);
        render_power_report(report, output_format_from_name(sim_format), sink.stream());
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
