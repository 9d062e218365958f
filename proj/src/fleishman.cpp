#include "jointrank/fleishman.hpp"

#include <cmath>

#include "jointrank/errors.hpp"
#include "jointrank/kernels.hpp"

namespace jointrank {

std::array<double, 3> fleishman_residuals(double b, double c, double d, double skewness,
                                          double excess_kurtosis) {
    const double f1 = b * b + 6.0 * b * d + 2.0 * c * c + 15.0 * d * d - 1.0;
    const double f2 = 2.0 * c * (b * b + 24.0 * b * d + 105.0 * d * d + 2.0) - skewness;
    const double f3 =
        24.0 * (b * d + c * c * (1.0 + b * b + 28.0 * b * d) +
                d * d * (12.0 + 48.0 * b * d + 141.0 * c * c + 225.0 * d * d)) -
        excess_kurtosis;
    return {f1, f2, f3};
}

namespace {

std::array<std::array<double, 3>, 3> jacobian(double b, double c, double d) {
    std::array<std::array<double, 3>, 3> j{};
    j[0] = {2.0 * b + 6.0 * d, 4.0 * c, 6.0 * b + 30.0 * d};
    j[1] = {2.0 * c * (2.0 * b + 24.0 * d),
            2.0 * (b * b + 24.0 * b * d + 105.0 * d * d + 2.0),
            2.0 * c * (24.0 * b + 210.0 * d)};
    j[2] = {24.0 * (d + 2.0 * b * c * c + 28.0 * d * c * c + 48.0 * d * d * d),
            24.0 * (2.0 * c + 2.0 * b * b * c + 56.0 * b * d * c + 282.0 * c * d * d),
            24.0 * (b + 28.0 * b * c * c + 24.0 * d + 144.0 * b * d * d +
                    282.0 * c * c * d + 900.0 * d * d * d)};
    return j;
}

bool solve3(std::array<std::array<double, 3>, 3> a, std::array<double, 3> rhs,
            std::array<double, 3>& x) {
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        if (std::fabs(a[piv][col]) < 1e-14) return false;
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            for (int cc = col; cc < 3; ++cc) a[r][cc] -= f * a[col][cc];
            rhs[r] -= f * rhs[col];
        }
    }
    for (int i = 0; i < 3; ++i) x[i] = rhs[i] / a[i][i];
    return true;
}

double norm_inf(const std::array<double, 3>& v) {
    return std::max(std::fabs(v[0]), std::max(std::fabs(v[1]), std::fabs(v[2])));
}

}  // namespace

FleishmanCoeffs fleishman_coefficients(double skewness, double excess_kurtosis) {
    double b = 1.0, c = skewness / 6.0, d = 0.0;
    auto res = fleishman_residuals(b, c, d, skewness, excess_kurtosis);
    double err = norm_inf(res);
    for (int it = 0; it < 200 && err >= 1e-10; ++it) {
        std::array<double, 3> step{};
        if (!solve3(jacobian(b, c, d), {-res[0], -res[1], -res[2]}, step))
            throw NumericalError("fleishman_coefficients: singular Jacobian (infeasible target)");
        double lambda = 1.0;
        bool moved = false;
        for (int half = 0; half < 40; ++half) {
            const double nb = b + lambda * step[0];
            const double nc = c + lambda * step[1];
            const double nd = d + lambda * step[2];
            const auto nres = fleishman_residuals(nb, nc, nd, skewness, excess_kurtosis);
            if (norm_inf(nres) < err * (1.0 - 1e-4 * lambda) || norm_inf(nres) < 1e-12) {
                b = nb;
                c = nc;
                d = nd;
                res = nres;
                err = norm_inf(res);
                moved = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!moved)
            throw NumericalError(
                "fleishman_coefficients: no convergence; target moments outside the "
                "feasible region");
    }
    if (err >= 1e-10)
        throw NumericalError(
            "fleishman_coefficients: residual above tolerance; target moments outside the "
            "feasible region");
    if (b < 0.0) {
        // (b, d) -> (-b, -d) yields the same distribution; keep the b > 0 root
        b = -b;
        d = -d;
    }
    FleishmanCoeffs out;
    out.b = b;
    out.c = c;
    out.d = d;
    out.a = -c;
    return out;
}

std::vector<double> sample_group(const std::optional<FleishmanCoeffs>& coeffs, std::size_t n,
                                 double location, double scale, Rng& rng) {
    if (n < 1) throw ValidationError("sample_group: need n >= 1");
    if (!(scale > 0.0)) throw ValidationError("sample_group: scale must be positive");
    std::vector<double> z(n);
    for (auto& v : z) v = rng.normal();
    if (!coeffs) {
        for (auto& v : z) v = location + scale * v;
        return z;
    }
    std::vector<double> out(n);
    // location + scale*(a + bZ + cZ^2 + dZ^3), folded into one cubic
    kernels::active().cubic_poly(z.data(), out.data(), n, location + scale * coeffs->a,
                                 scale * coeffs->b, scale * coeffs->c, scale * coeffs->d);
    return out;
}

}  // namespace jointrank
