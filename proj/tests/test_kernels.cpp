#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "jointrank/kernels.hpp"

using namespace jointrank;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> random_batch(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    std::vector<double> out(n);
    for (auto& v : out) v = d(rng);
    return out;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar norm_cdf matches erfc formula and symmetry") {
    const auto& ops = kernels::scalar_ops();
    std::vector<double> x = {-9.5, -8, -5, -3, -1.5, -0.3, 0, 0.3, 1.5, 3, 5, 8, 9.5};
    std::vector<double> y(x.size()), yn(x.size());
    ops.norm_cdf(x.data(), y.data(), x.size());
    std::vector<double> neg(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) neg[i] = -x[i];
    ops.norm_cdf(neg.data(), yn.data(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(y[i] == doctest::Approx(0.5 * std::erfc(-x[i] / std::sqrt(2.0))).epsilon(1e-14));
        CHECK(y[i] + yn[i] == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("norm_ppf round-trips through norm_cdf") {
    const auto& ops = kernels::scalar_ops();
    std::vector<double> p;
    for (double q = 1e-12; q < 0.5; q *= 4.7) {
        p.push_back(q);
        p.push_back(1.0 - q);
    }
    for (double q = 0.05; q < 0.96; q += 0.05) p.push_back(q);
    std::vector<double> z(p.size()), back(p.size());
    ops.norm_ppf(p.data(), z.data(), p.size());
    ops.norm_cdf(z.data(), back.data(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        CHECK(back[i] == doctest::Approx(p[i]).epsilon(5e-13));
}

TEST_CASE("avx2 kernels agree with scalar reference") {
    const kernels::Ops* vec = kernels::avx2_ops();
    if (!vec) return;  // CPU without AVX2
    const auto& ref = kernels::scalar_ops();
    std::mt19937_64 rng(7);

    SUBCASE("norm_cdf") {
        for (std::size_t n : {1, 3, 4, 7, 64, 513}) {
            auto x = random_batch(rng, n, -12.0, 12.0);
            std::vector<double> a(n), b(n);
            ref.norm_cdf(x.data(), a.data(), n);
            vec->norm_cdf(x.data(), b.data(), n);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(std::fabs(a[i] - b[i]) <= 2.5e-14);
        }
    }
    SUBCASE("norm_ppf") {
        for (std::size_t n : {2, 5, 256}) {
            auto p = random_batch(rng, n, 1e-9, 1.0 - 1e-9);
            p[0] = 1e-14;
            std::vector<double> a(n), b(n);
            ref.norm_ppf(p.data(), a.data(), n);
            vec->norm_ppf(p.data(), b.data(), n);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(std::fabs(a[i] - b[i]) <= 1e-12 * (1.0 + std::fabs(a[i])));
        }
    }
    SUBCASE("cubic_poly, axpy, dot, sum") {
        for (std::size_t n : {1, 9, 1000}) {
            auto x = random_batch(rng, n, -4.0, 4.0);
            auto y = random_batch(rng, n, -4.0, 4.0);
            std::vector<double> a(n), b(n);
            ref.cubic_poly(x.data(), a.data(), n, 0.3, 1.1, -0.4, 0.02);
            vec->cubic_poly(x.data(), b.data(), n, 0.3, 1.1, -0.4, 0.02);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-13));

            auto y2 = y;
            ref.axpy(0.77, x.data(), y.data(), n);
            vec->axpy(0.77, x.data(), y2.data(), n);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(y[i] == doctest::Approx(y2[i]).epsilon(1e-13));

            CHECK(ref.dot(x.data(), y.data(), n) ==
                  doctest::Approx(vec->dot(x.data(), y.data(), n)).epsilon(1e-12));
            CHECK(ref.sum(x.data(), n) ==
                  doctest::Approx(vec->sum(x.data(), n)).epsilon(1e-12));
        }
    }
    SUBCASE("sov_step with finite, infinite and radial variants") {
        for (bool with_radial : {false, true}) {
            for (auto bounds : {std::pair{-1.2, 2.3}, std::pair{-kInf, 1.0},
                                std::pair{-0.5, kInf}}) {
                const std::size_t n = 517;
                auto acc = random_batch(rng, n, -2.0, 2.0);
                auto w = random_batch(rng, n, 0.0, 1.0);
                auto radial = random_batch(rng, n, 0.4, 1.8);
                std::vector<double> f1(n, 1.0), f2(n, 1.0), y1(n), y2(n);
                kernels::SovArgs args;
                args.n = n;
                args.lo = bounds.first;
                args.hi = bounds.second;
                args.inv_diag = 1.0 / 0.8;
                args.acc = acc.data();
                args.radial = with_radial ? radial.data() : nullptr;
                args.w = w.data();
                args.f = f1.data();
                args.y_out = y1.data();
                ref.sov_step(args);
                args.f = f2.data();
                args.y_out = y2.data();
                vec->sov_step(args);
                for (std::size_t i = 0; i < n; ++i) {
                    CHECK(std::fabs(f1[i] - f2[i]) <= 1e-13);
                    CHECK(std::fabs(y1[i] - y2[i]) <= 2e-11 * (1.0 + std::fabs(y1[i])));
                }
            }
        }
    }
}

TEST_CASE("backend selection and forcing") {
    const auto original = kernels::active_backend();
    kernels::force_backend(kernels::Backend::scalar);
    CHECK(kernels::active_backend() == kernels::Backend::scalar);
    kernels::force_backend(std::nullopt);
    CHECK(kernels::active_backend() == original);
    CHECK(kernels::backend_name(kernels::Backend::scalar) == "scalar");
}

}  // TEST_SUITE
