#include "jointrank/special.hpp"

#include <cmath>

#include "jointrank/detail/normal_eval.hpp"
#include "jointrank/errors.hpp"

namespace jointrank::special {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;

// Lanczos g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

double norm_pdf(double x) { return std::exp(-0.5 * x * x - kLogSqrt2Pi); }

double norm_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double norm_ppf(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        if (p == 0.0) return -kInf;
        if (p == 1.0) return kInf;
        throw ValidationError("norm_ppf: probability outside [0, 1]");
    }
    return detail::phi_inv_table(p);
}

double lgamma_pos(double x) {
    if (!(x > 0.0)) throw ValidationError("lgamma_pos: argument must be positive");
    if (x < 0.5) {
        // reflection keeps the series argument above 1
        return std::log(M_PI / std::sin(M_PI * x)) - lgamma_pos(1.0 - x);
    }
    const double z = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
    const double t = z + 7.5;
    return kLogSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

namespace {

// Wilson-Hilferty normal approximation, used for very large shape where the
// series/continued fraction converge too slowly; relative error O(1/a).
double gamma_p_wilson_hilferty(double a, double x) {
    const double h = 1.0 / (9.0 * a);
    const double z = (std::cbrt(x / a) - (1.0 - h)) / std::sqrt(h);
    return norm_cdf(z);
}

constexpr double kGammaLargeShape = 5e4;

// Series for P(a, x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 4000; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16)
            return sum * std::exp(-x + a * std::log(x) - lgamma_pos(a));
    }
    throw NumericalError("gamma_p: series failed to converge");
}

// Lentz continued fraction for Q(a, x), valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16)
            return h * std::exp(-x + a * std::log(x) - lgamma_pos(a));
    }
    throw NumericalError("gamma_q: continued fraction failed to converge");
}

}  // namespace

double gamma_p(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw ValidationError("gamma_p: invalid arguments");
    if (x == 0.0) return 0.0;
    if (a > kGammaLargeShape) return gamma_p_wilson_hilferty(a, x);
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw ValidationError("gamma_q: invalid arguments");
    if (x == 0.0) return 1.0;
    if (a > kGammaLargeShape) return 1.0 - gamma_p_wilson_hilferty(a, x);
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double chi2_cdf(double x, double df) {
    if (x <= 0.0) return 0.0;
    return gamma_p(0.5 * df, 0.5 * x);
}

double chi2_ppf(double p, double df) {
    if (!(p >= 0.0 && p < 1.0)) throw ValidationError("chi2_ppf: probability outside [0, 1)");
    if (p == 0.0) return 0.0;
    const double a = 0.5 * df;
    // Wilson-Hilferty start, log-series start for tiny p
    double x;
    {
        const double z = norm_ppf(p);
        const double h = 2.0 / (9.0 * df);
        const double cube = 1.0 - h + z * std::sqrt(h);
        x = df * cube * cube * cube;
        if (!(x > 0.0) || cube <= 0.0)
            x = 2.0 * std::exp((std::log(p) + lgamma_pos(a + 1.0)) / a);
    }
    double lo = 0.0, hi = kInf;
    for (int it = 0; it < 200; ++it) {
        const double f = chi2_cdf(x, df) - p;
        if (f > 0.0) hi = x; else lo = x;
        const double logpdf = (a - 1.0) * std::log(0.5 * x) - 0.5 * x - lgamma_pos(a) - std::log(2.0);
        const double pdf = std::exp(logpdf);
        double nx = x - f / pdf;
        if (!(nx > lo && (hi == kInf || nx < hi)))
            nx = (hi == kInf) ? 2.0 * x : 0.5 * (lo + hi);
        if (std::fabs(nx - x) <= 1e-13 * (std::fabs(x) + 1e-300)) return nx;
        x = nx;
    }
    return x;
}

namespace {

double beta_cf(double a, double b, double x) {
    const double tiny = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 500; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) return h;
    }
    throw NumericalError("beta_inc: continued fraction failed to converge");
}

}  // namespace

double beta_inc(double a, double b, double x) {
    if (!(a > 0.0 && b > 0.0)) throw ValidationError("beta_inc: parameters must be positive");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double front =
        std::exp(lgamma_pos(a + b) - lgamma_pos(a) - lgamma_pos(b) + a * std::log(x) +
                 b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double t_pdf(double x, double df) {
    if (std::isinf(df)) return norm_pdf(x);
    const double lognorm =
        lgamma_pos(0.5 * (df + 1.0)) - lgamma_pos(0.5 * df) - 0.5 * std::log(df * M_PI);
    return std::exp(lognorm - 0.5 * (df + 1.0) * std::log1p(x * x / df));
}

double t_cdf(double x, double df) {
    if (std::isinf(df)) return norm_cdf(x);
    if (!(df > 0.0)) throw ValidationError("t_cdf: df must be positive");
    if (x == 0.0) return 0.5;
    const double half = 0.5 * beta_inc(0.5 * df, 0.5, df / (df + x * x));
    return x > 0.0 ? 1.0 - half : half;
}

double t_ppf(double p, double df) {
    if (std::isinf(df)) return norm_ppf(p);
    if (!(p > 0.0 && p < 1.0)) {
        if (p == 0.0) return -kInf;
        if (p == 1.0) return kInf;
        throw ValidationError("t_ppf: probability outside [0, 1]");
    }
    if (p == 0.5) return 0.0;
    const double z = norm_ppf(p);
    // Cornish-Fisher start
    double x = z + (z * z * z + z) / (4.0 * df) +
               (5.0 * std::pow(z, 5) + 16.0 * z * z * z + 3.0 * z) / (96.0 * df * df);
    double lo = -kInf, hi = kInf;
    for (int it = 0; it < 200; ++it) {
        const double f = t_cdf(x, df) - p;
        if (f > 0.0) hi = x; else lo = x;
        const double pdf = t_pdf(x, df);
        double nx = x - f / pdf;
        if (!(nx > lo && nx < hi)) {
            if (std::isinf(lo)) nx = x - 1.0 - std::fabs(x);
            else if (std::isinf(hi)) nx = x + 1.0 + std::fabs(x);
            else nx = 0.5 * (lo + hi);
        }
        if (std::fabs(nx - x) <= 1e-12 * (std::fabs(x) + 1.0)) return nx;
        x = nx;
    }
    return x;
}

}  // namespace jointrank::special
