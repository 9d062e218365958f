#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jointrank/contrasts.hpp"
#include "jointrank/dataset.hpp"
#include "jointrank/linalg.hpp"

namespace jointrank {

enum class EffectKind { location, scale, shape };

std::string effect_kind_name(EffectKind kind);

// Cell-means least-squares fit of one scored response on the group factor.
struct MarginalFit {
    EffectKind kind = EffectKind::location;
    std::vector<double> coefficients;  // per-group means of the scored response
    std::vector<double> residuals;     // length N
    Matrix design;                     // N x k group indicator
    double sigma2 = 0.0;               // residual variance, divisor N - k
    std::vector<std::size_t> group_sizes;
};

MarginalFit fit_marginal(const Dataset& ds, std::span<const double> scored, EffectKind kind);

enum class DfPolicy {
    paper,       // sum_j (n_j - 4)
    residual,    // N - k
    asymptotic,  // infinity: multivariate normal reference
};

// Small-sample scaling of the per-group meat contributions. `none` is the
// plain HC0 sandwich; `group_unbiased` rescales each group's residual
// cross-products by n_j/(n_j - 1) (unbiased per-group covariance under
// within-group homoscedasticity); `leverage_squared` applies the HC3-style
// (n_j/(n_j - 1))^2, the standard repair for the small-sample liberality of
// sandwich-based tests.
enum class MeatCorrection { none, group_unbiased, leverage_squared };

double degrees_of_freedom(DfPolicy policy, const std::vector<std::size_t>& group_sizes);

// Stacked contrast estimates across score models with their joint covariance,
// assembled from per-observation estimating functions (HC0 sandwich with
// block-diagonal bread).
struct StackedInference {
    std::vector<double> estimates;  // length m*s, location block first
    Matrix covariance;              // (m*s) x (m*s)
    Matrix correlation;             // unit diagonal
    double df = 0.0;                // +inf under DfPolicy::asymptotic
    std::vector<std::pair<EffectKind, std::string>> labels;
    std::size_t m = 0;  // contrasts per model
    std::size_t s = 0;  // number of score models
};

StackedInference stacked_covariance(const std::vector<MarginalFit>& fits,
                                    const ContrastMatrix& cm, DfPolicy df_rule,
                                    MeatCorrection correction = MeatCorrection::leverage_squared);

}  // namespace jointrank
