#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace jointrank::kernels {

enum class Backend { scalar, avx2 };

// One sequential-conditioning step of the rectangle-probability recursion,
// batched over sample points. Bounds are per-dimension constants (may be
// infinite); `radial` scales the bounds per point (t scale mixture) and may be
// null; `y_out` is null on the last dimension.
struct SovArgs {
    std::size_t n = 0;
    double lo = 0.0;
    double hi = 0.0;
    double inv_diag = 1.0;
    const double* acc = nullptr;
    const double* radial = nullptr;
    const double* w = nullptr;
    double* f = nullptr;
    double* y_out = nullptr;
};

struct Ops {
    void (*norm_cdf)(const double* x, double* out, std::size_t n);
    void (*norm_ppf)(const double* p, double* out, std::size_t n);
    void (*cubic_poly)(const double* z, double* out, std::size_t n,
                       double a, double b, double c, double d);
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    double (*dot)(const double* x, const double* y, std::size_t n);
    double (*sum)(const double* x, std::size_t n);
    void (*sov_step)(const SovArgs& args);
};

bool avx2_supported();
const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when the CPU lacks AVX2+FMA

// Active backend: AVX2 when supported unless JOINTRANK_NO_SIMD is set or a
// backend was forced. force_backend(nullopt) restores automatic selection.
const Ops& active();
Backend active_backend();
void force_backend(std::optional<Backend> backend);
std::string backend_name(Backend backend);

}  // namespace jointrank::kernels
