#pragma once

#include <cmath>

#include "jointrank/detail/normal_tables.hpp"

namespace jointrank::detail {

// Clenshaw evaluation of one Chebyshev piece with compile-time unknown degree.
inline double clenshaw(const double* c, int degree, double t) {
    double b1 = 0.0, b2 = 0.0;
    for (int k = degree; k >= 1; --k) {
        const double b0 = 2.0 * t * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return t * b1 - b2 + c[0];
}

// Table-based Phi with absolute accuracy ~4e-16; clamps to {0, 1} beyond |x| = 9.
inline double phi_table(double x) {
    const double ax = x < 0.0 ? x : -x;
    double v;
    if (ax <= kPhiLo) {
        v = 0.0;
    } else {
        const double width = -kPhiLo / kPhiIntervals;
        int idx = static_cast<int>((ax - kPhiLo) / width);
        if (idx >= kPhiIntervals) idx = kPhiIntervals - 1;
        const double a = kPhiLo + idx * width;
        const double t = (2.0 * ax - (2.0 * a + width)) / width;
        v = clenshaw(kPhiCoef + idx * (kPhiDegree + 1), kPhiDegree, t);
    }
    return x < 0.0 ? v : 1.0 - v;
}

// Table-based inverse Phi; scaled error < 2e-14 for p in (1e-80, 1 - 1e-16).
inline double phi_inv_table(double p) {
    const double v = p - 0.5;
    const double s = v * v;
    if (s <= kInvCentralSMax) {
        const double width = kInvCentralSMax / kInvCentralIntervals;
        int idx = static_cast<int>(s / width);
        if (idx >= kInvCentralIntervals) idx = kInvCentralIntervals - 1;
        const double a = idx * width;
        const double t = (2.0 * s - (2.0 * a + width)) / width;
        return v * clenshaw(kInvCentralCoef + idx * (kInvCentralDegree + 1),
                            kInvCentralDegree, t);
    }
    const double q = v < 0.0 ? p : 1.0 - p;
    // q == 0 only when callers forgot to clamp; saturate at the table limit.
    if (q <= 0.0) return v < 0.0 ? -38.5 : 38.5;
    double r = std::sqrt(-std::log(q));
    if (r > kInvTailEdges[kInvTailPieces]) r = kInvTailEdges[kInvTailPieces];
    int idx = 0;
    while (idx + 1 < kInvTailPieces && r > kInvTailEdges[idx + 1]) ++idx;
    const double a = kInvTailEdges[idx], b = kInvTailEdges[idx + 1];
    const double t = (2.0 * r - (a + b)) / (b - a);
    const double g = clenshaw(kInvTailCoef + idx * (kInvTailDegree + 1), kInvTailDegree, t);
    return v < 0.0 ? -g : g;
}

}  // namespace jointrank::detail
