#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jointrank/contrasts.hpp"
#include "jointrank/dataset.hpp"
#include "jointrank/maxt.hpp"

namespace jointrank {

struct PermutationPlan {
    std::size_t n_permutations = 10'000;
    std::uint64_t seed = 0;
    bool exhaustive = false;  // enumerate all distinct group assignments
};

struct KwResult {
    double statistic = 0.0;
    double df = 0.0;  // k - 1
    double p_asymptotic = 1.0;
    std::optional<double> p_permutation;
    std::size_t permutations_used = 0;
};

// Kruskal-Wallis with tie correction; optional permutation p-value with
// add-one smoothing (exact enumeration when the plan says so).
KwResult kw_test(const Dataset& ds, const std::optional<PermutationPlan>& plan = {});

struct RelEffectResult {
    std::vector<double> effects;  // global-rank relative effects, one per group
    std::vector<double> contrast_estimates;
    std::vector<double> std_errors;
    std::vector<double> statistics;
    std::vector<double> p_adjusted;
    double global_p = 1.0;
    double df = 0.0;  // Satterthwaite-type
    std::vector<std::string> labels;
};

// Everything up to (but not including) the multivariate-t probabilities:
// standardized contrast statistics with their correlation and df. Used for
// global-p-only evaluation in the simulation harness.
struct RelEffectCore {
    std::vector<double> effects;
    std::vector<double> contrast_estimates;
    std::vector<double> std_errors;
    std::vector<double> statistics;
    Matrix correlation;
    double df = 0.0;
};

RelEffectCore relative_effects_core(const Dataset& ds, const ContrastMatrix& cm);

// Global-rank multiple contrast test for relative effects with multivariate-t
// single-step adjustment.
RelEffectResult relative_effects_mctp(const Dataset& ds, const ContrastMatrix& cm,
                                      Alternative alt, double level, std::uint64_t seed,
                                      double accuracy = 1e-4);

}  // namespace jointrank
