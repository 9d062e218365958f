// AVX2+FMA variants of the batch kernels. This translation unit is the only
// one compiled with -mavx2 -mfma; it must not be entered on CPUs without them.
#include <cmath>
#include <cstdint>
#include <immintrin.h>

#include "jointrank/detail/normal_eval.hpp"
#include "jointrank/kernels.hpp"

namespace jointrank::kernels {

namespace {

constexpr double kUMin = 1e-300;
constexpr double kUMax = 1.0 - 1e-16;

// Fixed-coefficient Clenshaw shared by all lanes: no gathers. Processing V
// vectors at once interleaves V independent recurrence chains, hiding the
// fma latency of the serial Clenshaw dependency.
template <int V>
inline void clenshaw_same(const double* coef, int degree, const __m256d* t, __m256d* out) {
    __m256d two_t[V], b1[V], b2[V];
    for (int v = 0; v < V; ++v) {
        two_t[v] = _mm256_add_pd(t[v], t[v]);
        b1[v] = _mm256_setzero_pd();
        b2[v] = _mm256_setzero_pd();
    }
    for (int k = degree; k >= 1; --k) {
        const __m256d ck = _mm256_set1_pd(coef[k]);
        for (int v = 0; v < V; ++v) {
            const __m256d b0 = _mm256_add_pd(_mm256_fmsub_pd(two_t[v], b1[v], b2[v]), ck);
            b2[v] = b1[v];
            b1[v] = b0;
        }
    }
    const __m256d c0 = _mm256_set1_pd(coef[0]);
    for (int v = 0; v < V; ++v)
        out[v] = _mm256_add_pd(_mm256_fmsub_pd(t[v], b1[v], b2[v]), c0);
}

inline __m256d clenshaw_same4(const double* coef, int degree, __m256d t) {
    __m256d out;
    clenshaw_same<1>(coef, degree, &t, &out);
    return out;
}

// exp(x) for x in [-745, 0]: standard range reduction x = n ln2 + r with a
// split ln2, degree-12 Taylor on |r| <= ln2/2, and 2^n via exponent bits.
inline __m256d exp_neg4(__m256d x) {
    const __m256d inv_ln2 = _mm256_set1_pd(1.4426950408889634074);
    const __m256d ln2_hi = _mm256_set1_pd(0x1.62e42fee00000p-1);
    const __m256d ln2_lo = _mm256_set1_pd(0x1.a39ef35793c76p-33);
    const __m256d nf = _mm256_round_pd(_mm256_mul_pd(x, inv_ln2),
                                       _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(nf, ln2_hi, x);
    r = _mm256_fnmadd_pd(nf, ln2_lo, r);
    static constexpr double kInvFact[13] = {
        1.0,
        1.0,
        1.0 / 2,
        1.0 / 6,
        1.0 / 24,
        1.0 / 120,
        1.0 / 720,
        1.0 / 5040,
        1.0 / 40320,
        1.0 / 362880,
        1.0 / 3628800,
        1.0 / 39916800,
        1.0 / 479001600,
    };
    __m256d p = _mm256_set1_pd(kInvFact[12]);
    for (int k = 11; k >= 0; --k)
        p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(kInvFact[k]));
    // scale by 2^n
    const __m128i n32 = _mm256_cvtpd_epi32(nf);
    const __m256i n64 = _mm256_cvtepi32_epi64(n32);
    const __m256i bits = _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
    return _mm256_mul_pd(p, _mm256_castsi256_pd(bits));
}

template <int V>
inline void phi_vec(const __m256d* x, __m256d* out) {
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d a2 = _mm256_set1_pd(2.0);
    const double zmid = 0.5 * (detail::kErfcxZLo + detail::kErfcxZHi);
    const double zhalf = 0.5 * (detail::kErfcxZHi - detail::kErfcxZLo);
    __m256d t[V], zt[V], over[V];
    for (int v = 0; v < V; ++v) {
        // t = |x|/sqrt(2), capped at the table limit (Phi < 1e-19 beyond)
        t[v] = _mm256_mul_pd(_mm256_and_pd(x[v], abs_mask),
                             _mm256_set1_pd(0.70710678118654752440));
        over[v] = _mm256_cmp_pd(t[v], _mm256_set1_pd(detail::kErfcxTMax), _CMP_GT_OQ);
        t[v] = _mm256_min_pd(t[v], _mm256_set1_pd(detail::kErfcxTMax));
        const __m256d z = _mm256_div_pd(_mm256_sub_pd(t[v], a2), _mm256_add_pd(t[v], a2));
        zt[v] = _mm256_mul_pd(_mm256_sub_pd(z, _mm256_set1_pd(zmid)),
                              _mm256_set1_pd(1.0 / zhalf));
    }
    __m256d g[V];
    clenshaw_same<V>(detail::kErfcxCoef, detail::kErfcxDegree, zt, g);
    for (int v = 0; v < V; ++v) {
        // exp(-t^2) with the fma-exact residual correction
        const __m256d d = _mm256_mul_pd(t[v], t[v]);
        const __m256d resid = _mm256_fmsub_pd(t[v], t[v], d);  // t*t - d, exact
        __m256d e = exp_neg4(_mm256_sub_pd(_mm256_setzero_pd(), d));
        e = _mm256_fnmadd_pd(e, resid, e);  // e * (1 - resid)
        __m256d val = _mm256_mul_pd(half, _mm256_mul_pd(g[v], e));
        val = _mm256_andnot_pd(over[v], val);
        // val is Phi(-|x|); reflect for positive inputs
        const __m256d pos = _mm256_cmp_pd(x[v], _mm256_setzero_pd(), _CMP_GE_OQ);
        out[v] = _mm256_blendv_pd(val, _mm256_sub_pd(one, val), pos);
    }
}

inline __m256d phi4(__m256d x) {
    __m256d out;
    phi_vec<1>(&x, &out);
    return out;
}

// Inverse Phi: vectorized central branch (all four interval polynomials
// evaluated and blended, avoiding gathers), scalar fallback for tail lanes.
inline __m256d phi_inv4(__m256d u) {
    static_assert(detail::kInvCentralIntervals == 4);
    u = _mm256_max_pd(u, _mm256_set1_pd(kUMin));
    u = _mm256_min_pd(u, _mm256_set1_pd(kUMax));
    const __m256d v = _mm256_sub_pd(u, _mm256_set1_pd(0.5));
    const __m256d s = _mm256_mul_pd(v, v);
    const __m256d smax = _mm256_set1_pd(detail::kInvCentralSMax);
    const __m256d central = _mm256_cmp_pd(s, smax, _CMP_LE_OQ);

    const double width = detail::kInvCentralSMax / detail::kInvCentralIntervals;
    const int stride = detail::kInvCentralDegree + 1;
    __m256d h = _mm256_setzero_pd();
    for (int piece = 0; piece < detail::kInvCentralIntervals; ++piece) {
        const double a = piece * width;
        const __m256d t = _mm256_fmsub_pd(_mm256_sub_pd(s, _mm256_set1_pd(a)),
                                          _mm256_set1_pd(2.0 / width), _mm256_set1_pd(1.0));
        const __m256d cand =
            clenshaw_same4(detail::kInvCentralCoef + piece * stride,
                           detail::kInvCentralDegree, t);
        if (piece == 0) {
            h = cand;
        } else {
            const __m256d in_piece =
                _mm256_cmp_pd(s, _mm256_set1_pd(a), _CMP_GE_OQ);
            h = _mm256_blendv_pd(h, cand, in_piece);
        }
    }
    __m256d res = _mm256_mul_pd(v, h);

    const int tail_mask = _mm256_movemask_pd(central) ^ 0xf;
    if (tail_mask) {
        alignas(32) double uu[4], rr[4];
        _mm256_store_pd(uu, u);
        _mm256_store_pd(rr, res);
        for (int lane = 0; lane < 4; ++lane)
            if (tail_mask & (1 << lane)) rr[lane] = detail::phi_inv_table(uu[lane]);
        res = _mm256_load_pd(rr);
    }
    return res;
}

void v_norm_cdf(const double* x, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256d in[4] = {_mm256_loadu_pd(x + i), _mm256_loadu_pd(x + i + 4),
                         _mm256_loadu_pd(x + i + 8), _mm256_loadu_pd(x + i + 12)};
        __m256d res[4];
        phi_vec<4>(in, res);
        _mm256_storeu_pd(out + i, res[0]);
        _mm256_storeu_pd(out + i + 4, res[1]);
        _mm256_storeu_pd(out + i + 8, res[2]);
        _mm256_storeu_pd(out + i + 12, res[3]);
    }
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, phi4(_mm256_loadu_pd(x + i)));
    if (i < n) {
        alignas(32) double buf[4] = {0, 0, 0, 0};
        for (std::size_t j = i; j < n; ++j) buf[j - i] = x[j];
        alignas(32) double res[4];
        _mm256_store_pd(res, phi4(_mm256_load_pd(buf)));
        for (std::size_t j = i; j < n; ++j) out[j] = res[j - i];
    }
}

void v_norm_ppf(const double* p, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, phi_inv4(_mm256_loadu_pd(p + i)));
    if (i < n) {
        alignas(32) double buf[4] = {0.5, 0.5, 0.5, 0.5};
        for (std::size_t j = i; j < n; ++j) buf[j - i] = p[j];
        alignas(32) double res[4];
        _mm256_store_pd(res, phi_inv4(_mm256_load_pd(buf)));
        for (std::size_t j = i; j < n; ++j) out[j] = res[j - i];
    }
}

void v_cubic_poly(const double* z, double* out, std::size_t n,
                  double a, double b, double c, double d) {
    const __m256d va = _mm256_set1_pd(a), vb = _mm256_set1_pd(b);
    const __m256d vc = _mm256_set1_pd(c), vd = _mm256_set1_pd(d);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d zi = _mm256_loadu_pd(z + i);
        __m256d acc = _mm256_fmadd_pd(zi, vd, vc);
        acc = _mm256_fmadd_pd(zi, acc, vb);
        acc = _mm256_fmadd_pd(zi, acc, va);
        _mm256_storeu_pd(out + i, acc);
    }
    for (; i < n; ++i) {
        const double zi = z[i];
        out[i] = a + zi * (b + zi * (c + zi * d));
    }
}

void v_axpy(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i),
                                                _mm256_loadu_pd(y + i)));
        _mm256_storeu_pd(y + i + 4, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i + 4),
                                                    _mm256_loadu_pd(y + i + 4)));
    }
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i),
                                                _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) y[i] += a * x[i];
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double v_dot(const double* x, const double* y, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

double v_sum(const double* x, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
        acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(x + i + 4));
    }
    for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += x[i];
    return acc;
}

void v_sov_step(const SovArgs& a) {
    const bool has_lo = std::isfinite(a.lo);
    const bool has_hi = std::isfinite(a.hi);
    const __m256d vlo = _mm256_set1_pd(has_lo ? a.lo : 0.0);
    const __m256d vhi = _mm256_set1_pd(has_hi ? a.hi : 0.0);
    const __m256d vinv = _mm256_set1_pd(a.inv_diag);
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    // pairs of vectors; both bound arguments go through one batched cdf call
    for (; i + 8 <= a.n; i += 8) {
        const __m256d acc0 = _mm256_loadu_pd(a.acc + i);
        const __m256d acc1 = _mm256_loadu_pd(a.acc + i + 4);
        const __m256d sc0 = a.radial ? _mm256_loadu_pd(a.radial + i) : one;
        const __m256d sc1 = a.radial ? _mm256_loadu_pd(a.radial + i + 4) : one;
        __m256d d0 = _mm256_setzero_pd(), d1 = _mm256_setzero_pd();
        __m256d e0 = one, e1 = one;
        if (has_lo && has_hi) {
            __m256d args[4] = {
                _mm256_mul_pd(_mm256_fmsub_pd(vlo, sc0, acc0), vinv),
                _mm256_mul_pd(_mm256_fmsub_pd(vlo, sc1, acc1), vinv),
                _mm256_mul_pd(_mm256_fmsub_pd(vhi, sc0, acc0), vinv),
                _mm256_mul_pd(_mm256_fmsub_pd(vhi, sc1, acc1), vinv)};
            __m256d res[4];
            phi_vec<4>(args, res);
            d0 = res[0];
            d1 = res[1];
            e0 = res[2];
            e1 = res[3];
        } else if (has_lo || has_hi) {
            const __m256d vb = has_lo ? vlo : vhi;
            __m256d args[2] = {_mm256_mul_pd(_mm256_fmsub_pd(vb, sc0, acc0), vinv),
                               _mm256_mul_pd(_mm256_fmsub_pd(vb, sc1, acc1), vinv)};
            __m256d res[2];
            phi_vec<2>(args, res);
            if (has_lo) {
                d0 = res[0];
                d1 = res[1];
            } else {
                e0 = res[0];
                e1 = res[1];
            }
        }
        e0 = _mm256_max_pd(e0, d0);
        e1 = _mm256_max_pd(e1, d1);
        const __m256d span0 = _mm256_sub_pd(e0, d0);
        const __m256d span1 = _mm256_sub_pd(e1, d1);
        _mm256_storeu_pd(a.f + i, _mm256_mul_pd(_mm256_loadu_pd(a.f + i), span0));
        _mm256_storeu_pd(a.f + i + 4, _mm256_mul_pd(_mm256_loadu_pd(a.f + i + 4), span1));
        if (a.y_out) {
            const __m256d u0 = _mm256_fmadd_pd(_mm256_loadu_pd(a.w + i), span0, d0);
            const __m256d u1 = _mm256_fmadd_pd(_mm256_loadu_pd(a.w + i + 4), span1, d1);
            _mm256_storeu_pd(a.y_out + i, phi_inv4(u0));
            _mm256_storeu_pd(a.y_out + i + 4, phi_inv4(u1));
        }
    }
    for (; i + 4 <= a.n; i += 4) {
        const __m256d acc = _mm256_loadu_pd(a.acc + i);
        const __m256d scale = a.radial ? _mm256_loadu_pd(a.radial + i) : one;
        __m256d d = _mm256_setzero_pd();
        __m256d e = one;
        if (has_lo)
            d = phi4(_mm256_mul_pd(_mm256_fmsub_pd(vlo, scale, acc), vinv));
        if (has_hi)
            e = phi4(_mm256_mul_pd(_mm256_fmsub_pd(vhi, scale, acc), vinv));
        e = _mm256_max_pd(e, d);
        const __m256d span = _mm256_sub_pd(e, d);
        _mm256_storeu_pd(a.f + i, _mm256_mul_pd(_mm256_loadu_pd(a.f + i), span));
        if (a.y_out) {
            const __m256d u = _mm256_fmadd_pd(_mm256_loadu_pd(a.w + i), span, d);
            _mm256_storeu_pd(a.y_out + i, phi_inv4(u));
        }
    }
    if (i < a.n) {
        // delegate the ragged tail to the scalar kernel
        SovArgs tail = a;
        tail.n = a.n - i;
        tail.acc = a.acc + i;
        tail.radial = a.radial ? a.radial + i : nullptr;
        tail.w = a.w ? a.w + i : nullptr;
        tail.f = a.f + i;
        tail.y_out = a.y_out ? a.y_out + i : nullptr;
        scalar_ops().sov_step(tail);
    }
}

constexpr Ops kAvx2Ops = {v_norm_cdf, v_norm_ppf, v_cubic_poly,
                          v_axpy,     v_dot,      v_sum,       v_sov_step};

}  // namespace

const Ops* avx2_ops() { return avx2_supported() ? &kAvx2Ops : nullptr; }

}  // namespace jointrank::kernels
