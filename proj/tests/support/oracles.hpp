#pragma once

// Test-side reference implementations, deliberately independent of the library
// code paths they are used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracles {

inline double phi_ref(double x) { return 0.5 * std::erfc(-x / 1.4142135623730950488); }
inline double dnorm_ref(double x) {
    return std::exp(-0.5 * x * x) / 2.5066282746310005024;
}

// Adaptive Simpson quadrature.
inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                          double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Student-t CDF via direct quadrature of the density (no incomplete beta).
inline double t_cdf(double x, double df) {
    const double lognorm = std::lgamma(0.5 * (df + 1.0)) - std::lgamma(0.5 * df) -
                           0.5 * std::log(df * M_PI);
    auto dens = [&](double u) {
        return std::exp(lognorm - 0.5 * (df + 1.0) * std::log1p(u * u / df));
    };
    if (x < 0.0) return 1.0 - t_cdf(-x, df);
    // integrate the density from 0 to x; the tail beyond max(12, 3x) is negligible
    return 0.5 + integrate(dens, 0.0, x, 1e-13);
}

// Equicoordinate rectangle probability of the identity-correlation central
// multivariate t, via 1-D quadrature over the shared radial chi-square:
// P = E_s[(Phi(hi*s) - Phi(lo*s))^m] with s = sqrt(X/df), X ~ chi2(df).
inline double mvt_identity_rect(int m, double df, double lo, double hi) {
    const double a = 0.5 * df;
    auto integrand = [&](double x) {
        if (x <= 0.0) return 0.0;
        const double logpdf =
            (a - 1.0) * std::log(0.5 * x) - 0.5 * x - std::lgamma(a) - std::log(2.0);
        const double s = std::sqrt(x / df);
        const double span = phi_ref(hi * s) - phi_ref(lo * s);
        return std::exp(logpdf) * std::pow(span, double(m));
    };
    // the chi-square mass concentrates around df with width ~sqrt(2 df)
    const double x_lo = std::max(1e-8, df - 12.0 * std::sqrt(2.0 * df));
    const double x_hi = df + 14.0 * std::sqrt(2.0 * df) + 20.0;
    return integrate(integrand, x_lo, x_hi, 1e-12);
}

// P(X <= b1, Y <= b2) for a standard bivariate normal with correlation rho.
inline double bvn_cdf(double b1, double b2, double rho) {
    const double s = std::sqrt(1.0 - rho * rho);
    auto f = [&](double x) { return dnorm_ref(x) * phi_ref((b2 - rho * x) / s); };
    return integrate(f, -9.0, b1, 1e-12);
}

// Mid-ranks, reimplemented directly.
inline std::vector<double> midranks(const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
        const double mid = 0.5 * double(i + 1 + j + 1);
        for (std::size_t p = i; p <= j; ++p) r[order[p]] = mid;
        i = j + 1;
    }
    return r;
}

// Kruskal-Wallis H with tie correction, straight from the formula.
inline double kw_stat(const std::vector<double>& values, const std::vector<int>& gidx, int k) {
    const double n = double(values.size());
    const auto ranks = midranks(values);
    std::vector<double> sum(k, 0.0), cnt(k, 0.0);
    for (std::size_t i = 0; i < values.size(); ++i) {
        sum[gidx[i]] += ranks[i];
        cnt[gidx[i]] += 1.0;
    }
    double h = 0.0;
    for (int g = 0; g < k; ++g) {
        const double d = sum[g] / cnt[g] - 0.5 * (n + 1.0);
        h += cnt[g] * d * d;
    }
    h *= 12.0 / (n * (n + 1.0));
    std::vector<double> sorted(values);
    std::sort(sorted.begin(), sorted.end());
    double adj = 0.0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
        const double t = double(j - i + 1);
        adj += t * t * t - t;
        i = j + 1;
    }
    return h / (1.0 - adj / (n * n * n - n));
}

// Exact conditional permutation p-value by enumerating distinct assignments.
inline double kw_exhaustive_p(const std::vector<double>& values, std::vector<int> gidx, int k) {
    const double observed = kw_stat(values, gidx, k);
    const double threshold = observed * (1.0 - 1e-12) - 1e-12;
    std::sort(gidx.begin(), gidx.end());
    std::size_t total = 0, hits = 0;
    do {
        ++total;
        if (kw_stat(values, gidx, k) >= threshold) ++hits;
    } while (std::next_permutation(gidx.begin(), gidx.end()));
    return double(hits) / double(total);
}

// Monte Carlo equicoordinate quantile of max|T| for correlated t variates.
inline double maxt_mc_quantile(const std::vector<std::vector<double>>& corr, double df,
                               double level, std::size_t n_samples, std::uint64_t seed) {
    const std::size_t m = corr.size();
    // Cholesky
    std::vector<std::vector<double>> L(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            double acc = corr[i][j];
            for (std::size_t t = 0; t < j; ++t) acc -= L[i][t] * L[j][t];
            L[i][j] = (i == j) ? std::sqrt(acc) : acc / L[j][j];
        }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> norm;
    std::chi_squared_distribution<double> chi(df);
    std::vector<float> maxes;
    maxes.reserve(n_samples);
    std::vector<double> z(m);
    for (std::size_t s = 0; s < n_samples; ++s) {
        for (auto& v : z) v = norm(rng);
        const double scale = std::sqrt(df / chi(rng));
        double mx = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j <= i; ++j) acc += L[i][j] * z[j];
            mx = std::max(mx, std::fabs(acc * scale));
        }
        maxes.push_back(float(mx));
    }
    std::sort(maxes.begin(), maxes.end());
    const std::size_t idx = std::min(n_samples - 1,
                                     std::size_t(level * double(n_samples)));
    return maxes[idx];
}

}  // namespace oracles
