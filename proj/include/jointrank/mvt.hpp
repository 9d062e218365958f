#pragma once

#include <cstdint>
#include <vector>

#include "jointrank/linalg.hpp"

namespace jointrank {

// Central multivariate normal/t rectangle specification. df = infinity selects
// the normal; lower/upper entries may be +-infinity.
struct MvtSpec {
    Matrix correlation;
    double df = 0.0;
    std::vector<double> lower;
    std::vector<double> upper;
};

struct ProbResult {
    double value = 0.0;
    double error_estimate = 0.0;  // 3.5-sigma bound across randomized batches
    std::size_t points_used = 0;
    bool accuracy_reached = true;
    bool repaired = false;  // eigenvalue clipping was applied to the correlation
};

struct MvtOptions {
    double accuracy = 1e-4;
    std::size_t max_points = 10'000'000;
    std::uint64_t seed = 0;
    int batches = 12;
};

// Randomized-lattice estimate of P(lower <= X <= upper) via separation of
// variables with Cholesky factorization and variable reordering; deterministic
// for a fixed (spec, options) pair.
ProbResult mvt_probability(const MvtSpec& spec, const MvtOptions& options = {});

enum class Tail { two_sided, lower, upper };

// Scalar c with P(max_i |T_i| <= c) = level (two-sided) or the one-sided
// analogue. `accuracy` is the tolerance on c itself.
double equicoordinate_quantile(const Matrix& correlation, double df, double level, Tail tail,
                               double accuracy = 5e-4, const MvtOptions& options = {});

}  // namespace jointrank
