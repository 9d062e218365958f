#include "jointrank/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>

#include "jointrank/detail/normal_eval.hpp"
#include "jointrank/errors.hpp"

namespace jointrank::kernels {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kUMin = 1e-300;
constexpr double kUMax = 1.0 - 1e-16;

double phi_ref(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

void s_norm_cdf(const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = phi_ref(x[i]);
}

void s_norm_ppf(const double* p, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double u = p[i];
        if (u < kUMin) u = kUMin;
        if (u > kUMax) u = kUMax;
        out[i] = detail::phi_inv_table(u);
    }
}

void s_cubic_poly(const double* z, double* out, std::size_t n,
                  double a, double b, double c, double d) {
    for (std::size_t i = 0; i < n; ++i) {
        const double zi = z[i];
        out[i] = a + zi * (b + zi * (c + zi * d));
    }
}

void s_axpy(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double s_dot(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

double s_sum(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

void s_sov_step(const SovArgs& a) {
    const bool has_lo = std::isfinite(a.lo);
    const bool has_hi = std::isfinite(a.hi);
    for (std::size_t i = 0; i < a.n; ++i) {
        const double scale = a.radial ? a.radial[i] : 1.0;
        const double d = has_lo ? phi_ref((a.lo * scale - a.acc[i]) * a.inv_diag) : 0.0;
        double e = has_hi ? phi_ref((a.hi * scale - a.acc[i]) * a.inv_diag) : 1.0;
        if (e < d) e = d;
        a.f[i] *= e - d;
        if (a.y_out) {
            double u = d + a.w[i] * (e - d);
            if (u < kUMin) u = kUMin;
            if (u > kUMax) u = kUMax;
            a.y_out[i] = detail::phi_inv_table(u);
        }
    }
}

constexpr Ops kScalarOps = {s_norm_cdf, s_norm_ppf, s_cubic_poly,
                            s_axpy,     s_dot,      s_sum,       s_sov_step};

std::atomic<const Ops*> g_forced{nullptr};

const Ops* select_auto() {
    if (const char* env = std::getenv("JOINTRANK_NO_SIMD"); env && env[0] && env[0] != '0')
        return &kScalarOps;
    if (const Ops* vec = avx2_ops()) return vec;
    return &kScalarOps;
}

}  // namespace

bool avx2_supported() {
#if defined(__x86_64__) && !defined(JOINTRANK_NO_AVX2_BUILD)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

#ifdef JOINTRANK_NO_AVX2_BUILD
const Ops* avx2_ops() { return nullptr; }
#endif

const Ops& scalar_ops() { return kScalarOps; }

const Ops& active() {
    if (const Ops* forced = g_forced.load(std::memory_order_relaxed)) return *forced;
    static const Ops* auto_selected = select_auto();
    return *auto_selected;
}

Backend active_backend() { return &active() == &kScalarOps ? Backend::scalar : Backend::avx2; }

void force_backend(std::optional<Backend> backend) {
    if (!backend) {
        g_forced.store(nullptr, std::memory_order_relaxed);
        return;
    }
    if (*backend == Backend::scalar) {
        g_forced.store(&kScalarOps, std::memory_order_relaxed);
        return;
    }
    const Ops* vec = avx2_ops();
    if (!vec) throw ValidationError("force_backend: AVX2 not supported on this CPU");
    g_forced.store(vec, std::memory_order_relaxed);
}

std::string backend_name(Backend backend) {
    return backend == Backend::scalar ? "scalar" : "avx2";
}

}  // namespace jointrank::kernels
