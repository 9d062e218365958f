#include "jointrank/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "jointrank/errors.hpp"
#include "jointrank/rng.hpp"
#include "jointrank/scores.hpp"
#include "jointrank/special.hpp"

namespace jointrank {

namespace {

// H computed from the rank multiset (tie correction fixed by the data); only
// the assignment of ranks to groups changes under permutation.
double kw_statistic(const std::vector<double>& ranks, const std::vector<int>& gidx,
                    const std::vector<std::size_t>& sizes, double tie_divisor) {
    const double n = static_cast<double>(ranks.size());
    std::vector<double> sums(sizes.size(), 0.0);
    for (std::size_t i = 0; i < ranks.size(); ++i) sums[gidx[i]] += ranks[i];
    double h = 0.0;
    for (std::size_t g = 0; g < sizes.size(); ++g) {
        const double ng = static_cast<double>(sizes[g]);
        const double d = sums[g] / ng - 0.5 * (n + 1.0);
        h += ng * d * d;
    }
    return (12.0 / (n * (n + 1.0))) * h / tie_divisor;
}

double tie_correction(const std::vector<double>& values) {
    std::vector<double> sorted(values);
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(values.size());
    double adj = 0.0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
        const double t = static_cast<double>(j - i + 1);
        adj += t * t * t - t;
        i = j + 1;
    }
    return 1.0 - adj / (n * n * n - n);
}

}  // namespace

KwResult kw_test(const Dataset& ds, const std::optional<PermutationPlan>& plan) {
    const std::size_t n = ds.size();
    const std::size_t k = ds.n_groups();
    const double divisor = tie_correction({ds.values().begin(), ds.values().end()});
    if (divisor <= 0.0)
        throw ValidationError("kw_test: all observations tied; statistic undefined");

    const std::vector<double> ranks = midranks(ds.values());
    std::vector<int> gidx(ds.group_index().begin(), ds.group_index().end());

    KwResult result;
    result.statistic = kw_statistic(ranks, gidx, ds.group_sizes(), divisor);
    result.df = static_cast<double>(k - 1);
    result.p_asymptotic = special::gamma_q(0.5 * result.df, 0.5 * result.statistic);

    if (!plan) return result;

    const double threshold = result.statistic * (1.0 - 1e-12) - 1e-12;
    if (plan->exhaustive) {
        std::vector<int> perm = gidx;
        std::sort(perm.begin(), perm.end());
        std::size_t total = 0, hits = 0;
        do {
            ++total;
            if (kw_statistic(ranks, perm, ds.group_sizes(), divisor) >= threshold) ++hits;
        } while (std::next_permutation(perm.begin(), perm.end()));
        result.p_permutation = static_cast<double>(hits) / static_cast<double>(total);
        result.permutations_used = total;
        return result;
    }

    if (plan->n_permutations < 1) throw ValidationError("kw_test: need at least 1 permutation");
    std::size_t hits = 0;
    std::vector<int> perm(n);
    for (std::size_t rep = 0; rep < plan->n_permutations; ++rep) {
        Rng rng = Rng::substream(plan->seed, rep);
        perm = gidx;
        for (std::size_t i = n - 1; i > 0; --i) {
            const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
            std::swap(perm[i], perm[j]);
        }
        if (kw_statistic(ranks, perm, ds.group_sizes(), divisor) >= threshold) ++hits;
    }
    result.p_permutation = static_cast<double>(1 + hits) /
                           static_cast<double>(1 + plan->n_permutations);
    result.permutations_used = plan->n_permutations;
    return result;
}

RelEffectCore relative_effects_core(const Dataset& ds, const ContrastMatrix& cm) {
    const std::size_t n = ds.size();
    const std::size_t k = ds.n_groups();
    if (cm.k() != k)
        throw ValidationError("relative_effects_mctp: contrast width != group count");

    const std::vector<double> ranks = midranks(ds.values());
    const auto& sizes = ds.group_sizes();
    const double nd = static_cast<double>(n);

    RelEffectCore result;
    result.effects.assign(k, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        result.effects[ds.group_index()[i]] += (ranks[i] - 0.5) / nd;
    for (std::size_t g = 0; g < k; ++g)
        result.effects[g] /= static_cast<double>(sizes[g]);

    // Per-observation influence contributions to each effect:
    //   psi_j(l, i) = [H(X) - p_j]/n_j * 1{l=j} + [K_j(X) - mean_l K_j]/N
    // with H the pooled mid-cdf and K_j(x) = P(X_j > x) + 0.5 P(X_j = x).
    std::vector<std::vector<double>> sorted_group(k);
    for (std::size_t g = 0; g < k; ++g) {
        sorted_group[g] = ds.values_of_group(g);
        std::sort(sorted_group[g].begin(), sorted_group[g].end());
    }
    auto k_of = [&](std::size_t j, double x) {
        const auto& sg = sorted_group[j];
        const auto lo = std::lower_bound(sg.begin(), sg.end(), x) - sg.begin();
        const auto hi = std::upper_bound(sg.begin(), sg.end(), x) - sg.begin();
        const double fmid = (static_cast<double>(lo) + 0.5 * static_cast<double>(hi - lo)) /
                            static_cast<double>(sg.size());
        return 1.0 - fmid;
    };

    Matrix psi(n, k);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<double> kappa(k, 0.0);
        std::vector<double> kj(n);
        for (std::size_t i = 0; i < n; ++i) {
            kj[i] = k_of(j, ds.values()[i]);
            kappa[ds.group_index()[i]] += kj[i];
        }
        for (std::size_t l = 0; l < k; ++l) kappa[l] /= static_cast<double>(sizes[l]);
        for (std::size_t i = 0; i < n; ++i) {
            const auto l = static_cast<std::size_t>(ds.group_index()[i]);
            double v = (kj[i] - kappa[l]) / nd;
            if (l == j)
                v += ((ranks[i] - 0.5) / nd - result.effects[j]) / static_cast<double>(sizes[j]);
            psi(i, j) = v;
        }
    }

    // V = sum over groups of (n_l/(n_l-1)) * sum_{i in l} psi_i psi_i^T
    Matrix v(k, k);
    for (std::size_t i = 0; i < n; ++i) {
        const auto l = static_cast<std::size_t>(ds.group_index()[i]);
        const double w = static_cast<double>(sizes[l]) / (static_cast<double>(sizes[l]) - 1.0);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a; b < k; ++b) {
                const double t = w * psi(i, a) * psi(i, b);
                v(a, b) += t;
                if (a != b) v(b, a) += t;
            }
    }

    const std::size_t m = cm.m();
    result.contrast_estimates = matvec(cm.rows, result.effects);
    Matrix cv(m, m);
    {
        const Matrix tmp = matmul(cm.rows, v);
        cv = matmul(tmp, cm.rows.transposed());
    }
    result.std_errors.resize(m);
    result.statistics.resize(m);
    result.correlation = Matrix(m, m);
    for (std::size_t q = 0; q < m; ++q)
        result.std_errors[q] = std::sqrt(std::max(0.0, cv(q, q)));
    for (std::size_t q = 0; q < m; ++q) {
        const double se = result.std_errors[q];
        const double est = result.contrast_estimates[q];
        result.statistics[q] =
            se > 0.0 ? est / se
                     : (est == 0.0 ? 0.0 : std::copysign(special::kInf, est));
        for (std::size_t r = 0; r < m; ++r) {
            if (q == r) {
                result.correlation(q, r) = 1.0;
            } else if (result.std_errors[q] > 0.0 && result.std_errors[r] > 0.0) {
                result.correlation(q, r) = std::clamp(
                    cv(q, r) / (result.std_errors[q] * result.std_errors[r]), -1.0, 1.0);
            } else {
                result.correlation(q, r) = 0.0;
            }
        }
    }

    // Satterthwaite df from per-group shares of each contrast variance;
    // the joint distribution uses the smallest df over contrasts.
    double df = special::kInf;
    for (std::size_t q = 0; q < m; ++q) {
        std::vector<double> share(k, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto l = static_cast<std::size_t>(ds.group_index()[i]);
            double contrib = 0.0;
            for (std::size_t j = 0; j < k; ++j) contrib += cm.rows(q, j) * psi(i, j);
            share[l] += contrib * contrib * static_cast<double>(sizes[l]) /
                        (static_cast<double>(sizes[l]) - 1.0);
        }
        double total = 0.0, denom = 0.0;
        for (std::size_t l = 0; l < k; ++l) {
            total += share[l];
            denom += share[l] * share[l] / (static_cast<double>(sizes[l]) - 1.0);
        }
        if (denom > 0.0) df = std::min(df, total * total / denom);
    }
    if (!(df > 2.01)) df = 2.01;
    result.df = df;
    return result;
}

RelEffectResult relative_effects_mctp(const Dataset& ds, const ContrastMatrix& cm,
                                      Alternative alt, double level, std::uint64_t seed,
                                      double accuracy) {
    if (!(level > 0.0 && level < 1.0))
        throw ValidationError("relative_effects_mctp: level must be in (0, 1)");
    RelEffectCore core = relative_effects_core(ds, cm);
    RelEffectResult result;
    result.effects = std::move(core.effects);
    result.contrast_estimates = std::move(core.contrast_estimates);
    result.std_errors = std::move(core.std_errors);
    result.statistics = std::move(core.statistics);
    result.df = core.df;
    result.p_adjusted =
        maxt_adjusted_p(result.statistics, core.correlation, core.df, alt, accuracy, seed);
    result.global_p = 1.0;
    for (double p : result.p_adjusted) result.global_p = std::min(result.global_p, p);
    result.labels = cm.row_labels;
    return result;
}

}  // namespace jointrank
