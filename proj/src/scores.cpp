#include "jointrank/scores.hpp"

#include <algorithm>
#include <numeric>

#include "jointrank/errors.hpp"

namespace jointrank {

namespace {

// Visits tie runs of the sorted order: fn(first_pos, last_pos, order) with
// 0-based positions into the sorted sequence.
template <typename Fn>
void for_tie_runs(std::span<const double> values, Fn&& fn) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        fn(i, j, order);
        i = j + 1;
    }
}

void require_nonempty(std::span<const double> values, const char* what) {
    if (values.empty()) throw ValidationError(std::string(what) + ": empty input");
}

}  // namespace

std::vector<double> midranks(std::span<const double> values) {
    require_nonempty(values, "midranks");
    std::vector<double> out(values.size());
    for_tie_runs(values, [&](std::size_t i, std::size_t j, const std::vector<std::size_t>& order) {
        const double mid = 0.5 * static_cast<double>((i + 1) + (j + 1));
        for (std::size_t p = i; p <= j; ++p) out[order[p]] = mid;
    });
    return out;
}

std::vector<double> ansari_scores(std::span<const double> values) {
    require_nonempty(values, "ansari_scores");
    std::vector<double> out = midranks(values);
    const double np1 = static_cast<double>(values.size()) + 1.0;
    for (double& r : out) r = std::min(r, np1 - r);
    return out;
}

std::vector<double> savage_scores(std::span<const double> values) {
    require_nonempty(values, "savage_scores");
    const std::size_t n = values.size();
    // positional scores s(p) = sum_{l=1..p} 1/(n-l+1) - 1, accumulated once
    std::vector<double> positional(n);
    double acc = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
        acc += 1.0 / static_cast<double>(n - p);
        positional[p] = acc - 1.0;
    }
    std::vector<double> out(n);
    for_tie_runs(values, [&](std::size_t i, std::size_t j, const std::vector<std::size_t>& order) {
        double mean = 0.0;
        for (std::size_t p = i; p <= j; ++p) mean += positional[p];
        mean /= static_cast<double>(j - i + 1);
        for (std::size_t p = i; p <= j; ++p) out[order[p]] = mean;
    });
    return out;
}

ScoreSet compute_scores(std::span<const double> values) {
    require_nonempty(values, "compute_scores");
    ScoreSet s;
    s.midrank = midranks(values);
    const double np1 = static_cast<double>(values.size()) + 1.0;
    s.ansari = s.midrank;
    for (double& r : s.ansari) r = std::min(r, np1 - r);
    s.savage = savage_scores(values);
    for_tie_runs(values, [&](std::size_t i, std::size_t j, const std::vector<std::size_t>&) {
        s.tie_pattern.push_back(j - i + 1);
    });
    std::sort(s.tie_pattern.begin(), s.tie_pattern.end());
    return s;
}

}  // namespace jointrank
