#pragma once

#include <span>
#include <vector>

namespace jointrank {

// The three pooled-sample score transforms plus the tie-group sizes they were
// computed under. All transforms use mid-ranks / averaged positional scores
// for ties and depend on the data only through its ordering.
struct ScoreSet {
    std::vector<double> midrank;
    std::vector<double> ansari;
    std::vector<double> savage;
    std::vector<std::size_t> tie_pattern;  // sizes of tie groups (>= 1), sorted
};

std::vector<double> midranks(std::span<const double> values);

// a_i = min(r_i, N + 1 - r_i) on mid-ranks; sensitive to scale differences.
std::vector<double> ansari_scores(std::span<const double> values);

// Cumulative exponential-order scores, centered by -1; ties averaged over the
// positional scores they occupy. Sensitive to Lehmann-type alternatives.
std::vector<double> savage_scores(std::span<const double> values);

ScoreSet compute_scores(std::span<const double> values);

}  // namespace jointrank
