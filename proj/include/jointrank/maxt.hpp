#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jointrank/contrasts.hpp"
#include "jointrank/dataset.hpp"
#include "jointrank/marginal.hpp"
#include "jointrank/mvt.hpp"

namespace jointrank {

enum class Alternative { two_sided, greater, less };

std::string alternative_name(Alternative alt);

struct TestRow {
    EffectKind kind = EffectKind::location;
    std::string hypothesis;
    double estimate = 0.0;
    double std_error = 0.0;
    double statistic = 0.0;
    double p_adjusted = 1.0;
};

struct ConfidenceLimit {
    std::string label;
    double lower = 0.0;
    double upper = 0.0;
};

struct TestReport {
    std::vector<TestRow> rows;
    double global_p = 1.0;  // min over adjusted p-values
    Alternative alternative = Alternative::two_sided;
    double df = 0.0;
    double level = 0.95;
    double critical_value = 0.0;
    std::vector<ConfidenceLimit> sci;  // location block; empty when not computed
    std::uint64_t seed = 0;
};

struct JointOptions {
    DfPolicy df_policy = DfPolicy::paper;
    MeatCorrection meat_correction = MeatCorrection::leverage_squared;
    double accuracy = 1e-4;
    double quantile_accuracy = 1e-3;  // tolerance on the critical value
    bool with_sci = true;
    EffectKind sci_block = EffectKind::location;
};

// Single-step max-T adjusted p-values for given standardized statistics under
// the central df-variate t with the given correlation. Shared by the joint
// test and the relative-effects test.
std::vector<double> maxt_adjusted_p(const std::vector<double>& statistics,
                                    const Matrix& correlation, double df, Alternative alt,
                                    double accuracy, std::uint64_t seed);

// Global p for the double maximum: one rectangle evaluation at the observed
// extreme statistic.
double maxt_global_p(const std::vector<double>& statistics, const Matrix& correlation,
                     double df, Alternative alt, double accuracy, std::uint64_t seed);

std::vector<double> adjusted_p_values(const StackedInference& si, Alternative alt,
                                      double accuracy, std::uint64_t seed);

std::vector<ConfidenceLimit> simultaneous_ci(const StackedInference& si, EffectKind block,
                                             double level, Alternative alt, std::uint64_t seed,
                                             double quantile_accuracy = 5e-4);

// The joint double maximum test: three rank-score marginal models, stacked
// covariance, max-T over all contrasts and score blocks.
TestReport joint_double_max_test(const Dataset& ds, const ContrastMatrix& cm, Alternative alt,
                                 double level, std::uint64_t seed,
                                 const JointOptions& options = {});

}  // namespace jointrank
