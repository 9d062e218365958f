#include "jointrank/maxt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jointrank/errors.hpp"
#include "jointrank/scores.hpp"
#include "jointrank/special.hpp"

namespace jointrank {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double rectangle_prob(const Matrix& correlation, double df, double threshold, Alternative alt,
                      double accuracy, std::uint64_t seed, std::size_t max_points) {
    const std::size_t dim = correlation.rows();
    MvtSpec spec;
    spec.correlation = correlation;
    spec.df = df;
    switch (alt) {
        case Alternative::two_sided:
            if (threshold <= 0.0) return 0.0;
            spec.lower.assign(dim, -threshold);
            spec.upper.assign(dim, threshold);
            break;
        case Alternative::greater:
            spec.lower.assign(dim, -kInf);
            spec.upper.assign(dim, threshold);
            break;
        case Alternative::less:
            // P(T >= t everywhere) = P(T <= -t everywhere) for the central law
            spec.lower.assign(dim, -kInf);
            spec.upper.assign(dim, -threshold);
            break;
    }
    MvtOptions opts;
    opts.accuracy = accuracy;
    opts.seed = seed;
    opts.max_points = max_points;
    return mvt_probability(spec, opts).value;
}

// Adjusted p-value with tail refinement: the integrator's error target is
// absolute, so a p-value smaller than the requested accuracy is re-estimated
// with an error target proportional to its own size. Tail rectangles have
// integrand variance on the scale of p, so this converges quickly.
double refined_p(const Matrix& correlation, double df, double threshold, Alternative alt,
                 double accuracy, std::uint64_t seed) {
    double p = 1.0 - rectangle_prob(correlation, df, threshold, alt, accuracy, seed, 10'000'000);
    if (p < 10.0 * accuracy) {
        const double sharper =
            std::clamp(std::max(p, accuracy * 0.01) * 0.05, 1e-9, accuracy);
        p = 1.0 - rectangle_prob(correlation, df, threshold, alt, sharper, seed, 1'000'000);
    }
    return std::clamp(p, 0.0, 1.0);
}

double row_threshold(double statistic, Alternative alt) {
    return alt == Alternative::two_sided ? std::fabs(statistic) : statistic;
}

}  // namespace

std::string alternative_name(Alternative alt) {
    switch (alt) {
        case Alternative::two_sided: return "two-sided";
        case Alternative::greater: return "greater";
        case Alternative::less: return "less";
    }
    return "?";
}

std::vector<double> maxt_adjusted_p(const std::vector<double>& statistics,
                                    const Matrix& correlation, double df, Alternative alt,
                                    double accuracy, std::uint64_t seed) {
    if (statistics.size() != correlation.rows())
        throw ValidationError("maxt_adjusted_p: statistic count != correlation dimension");
    std::vector<double> out(statistics.size());
    for (std::size_t i = 0; i < statistics.size(); ++i) {
        const double t = statistics[i];
        if (std::isnan(t)) throw NumericalError("maxt_adjusted_p: NaN statistic");
        const double thr = row_threshold(t, alt);
        double p;
        if (std::isinf(thr)) {
            p = thr > 0.0 ? 0.0 : 1.0;
        } else {
            p = refined_p(correlation, df, thr, alt, accuracy, seed);
        }
        out[i] = p;
    }
    return out;
}

double maxt_global_p(const std::vector<double>& statistics, const Matrix& correlation,
                     double df, Alternative alt, double accuracy, std::uint64_t seed) {
    if (statistics.empty()) throw ValidationError("maxt_global_p: no statistics");
    double extreme = -kInf;
    for (double t : statistics) extreme = std::max(extreme, row_threshold(t, alt));
    if (std::isinf(extreme)) return extreme > 0.0 ? 0.0 : 1.0;
    // decision path: no tail refinement (callers compare against a level far
    // above the integration error)
    return std::clamp(
        1.0 - rectangle_prob(correlation, df, extreme, alt, accuracy, seed, 10'000'000), 0.0,
        1.0);
}

namespace {

std::vector<double> standardized_statistics(const StackedInference& si) {
    std::vector<double> stats(si.estimates.size());
    for (std::size_t i = 0; i < si.estimates.size(); ++i) {
        const double se = std::sqrt(std::max(0.0, si.covariance(i, i)));
        const double est = si.estimates[i];
        if (se > 0.0) {
            stats[i] = est / se;
        } else {
            stats[i] = est == 0.0 ? 0.0 : (est > 0.0 ? kInf : -kInf);
        }
    }
    return stats;
}

}  // namespace

std::vector<double> adjusted_p_values(const StackedInference& si, Alternative alt,
                                      double accuracy, std::uint64_t seed) {
    return maxt_adjusted_p(standardized_statistics(si), si.correlation, si.df, alt, accuracy,
                           seed);
}

namespace {

std::vector<ConfidenceLimit> build_sci(const StackedInference& si, EffectKind block,
                                       Alternative alt, double c) {
    bool present = false;
    for (const auto& label : si.labels)
        if (label.first == block) present = true;
    if (!present) throw ValidationError("simultaneous_ci: requested block not in inference");

    std::vector<ConfidenceLimit> out;
    for (std::size_t i = 0; i < si.labels.size(); ++i) {
        if (si.labels[i].first != block) continue;
        const double se = std::sqrt(std::max(0.0, si.covariance(i, i)));
        ConfidenceLimit ci;
        ci.label = si.labels[i].second;
        switch (alt) {
            case Alternative::two_sided:
                ci.lower = si.estimates[i] - c * se;
                ci.upper = si.estimates[i] + c * se;
                break;
            case Alternative::greater:
                ci.lower = si.estimates[i] - c * se;
                ci.upper = kInf;
                break;
            case Alternative::less:
                ci.lower = -kInf;
                ci.upper = si.estimates[i] + c * se;
                break;
        }
        out.push_back(ci);
    }
    return out;
}

}  // namespace

std::vector<ConfidenceLimit> simultaneous_ci(const StackedInference& si, EffectKind block,
                                             double level, Alternative alt, std::uint64_t seed,
                                             double quantile_accuracy) {
    MvtOptions opts;
    opts.seed = seed;
    const Tail tail = alt == Alternative::two_sided ? Tail::two_sided : Tail::lower;
    const double c =
        equicoordinate_quantile(si.correlation, si.df, level, tail, quantile_accuracy, opts);
    return build_sci(si, block, alt, c);
}

TestReport joint_double_max_test(const Dataset& ds, const ContrastMatrix& cm, Alternative alt,
                                 double level, std::uint64_t seed, const JointOptions& options) {
    if (!(level > 0.5 && level < 1.0))
        throw ValidationError("joint_double_max_test: level must be in (0.5, 1)");
    if (cm.k() != ds.n_groups())
        throw ValidationError("joint_double_max_test: contrast width != group count");

    const ScoreSet scores = compute_scores(ds.values());
    std::vector<MarginalFit> fits;
    fits.push_back(fit_marginal(ds, scores.midrank, EffectKind::location));
    fits.push_back(fit_marginal(ds, scores.ansari, EffectKind::scale));
    fits.push_back(fit_marginal(ds, scores.savage, EffectKind::shape));
    const StackedInference si =
        stacked_covariance(fits, cm, options.df_policy, options.meat_correction);

    const std::vector<double> stats = standardized_statistics(si);
    const std::vector<double> pvals =
        maxt_adjusted_p(stats, si.correlation, si.df, alt, options.accuracy, seed);

    TestReport report;
    report.alternative = alt;
    report.df = si.df;
    report.level = level;
    report.seed = seed;
    report.global_p = 1.0;
    for (std::size_t i = 0; i < stats.size(); ++i) {
        TestRow row;
        row.kind = si.labels[i].first;
        row.hypothesis = si.labels[i].second;
        row.estimate = si.estimates[i];
        row.std_error = std::sqrt(std::max(0.0, si.covariance(i, i)));
        row.statistic = stats[i];
        row.p_adjusted = pvals[i];
        report.global_p = std::min(report.global_p, row.p_adjusted);
        report.rows.push_back(row);
    }

    const Tail tail = alt == Alternative::two_sided ? Tail::two_sided : Tail::lower;
    MvtOptions qopts;
    qopts.seed = seed;
    report.critical_value = equicoordinate_quantile(si.correlation, si.df, level, tail,
                                                    options.quantile_accuracy, qopts);
    if (options.with_sci)
        report.sci = build_sci(si, options.sci_block, alt, report.critical_value);
    return report;
}

}  // namespace jointrank
