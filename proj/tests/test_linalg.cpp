#include <doctest.h>

#include <cmath>
#include <random>

#include "jointrank/linalg.hpp"

using namespace jointrank;

TEST_SUITE("linalg") {

TEST_CASE("matmul and quad_form agree") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    Matrix a(3, 5);
    std::vector<double> d(5);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 5; ++j) a(i, j) = u(rng);
    for (auto& v : d) v = std::fabs(u(rng)) + 0.1;
    Matrix dm(5, 5);
    for (std::size_t j = 0; j < 5; ++j) dm(j, j) = d[j];
    const Matrix expect = matmul(matmul(a, dm), a.transposed());
    const Matrix got = quad_form(a, d);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(got(i, j) == doctest::Approx(expect(i, j)).epsilon(1e-13));
}

TEST_CASE("jacobi eigen on a known matrix") {
    // [[2,1],[1,2]] has eigenvalues 1 and 3
    Matrix m(2, 2);
    m(0, 0) = 2; m(0, 1) = 1; m(1, 0) = 1; m(1, 1) = 2;
    const auto eig = jacobi_eigen(m);
    CHECK(eig.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eig.values[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("jacobi reconstructs random symmetric matrices") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 2 + rep % 7;
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                m(i, j) = u(rng);
                m(j, i) = m(i, j);
            }
        const auto eig = jacobi_eigen(m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                double acc = 0.0;
                for (std::size_t t = 0; t < n; ++t)
                    acc += eig.vectors(i, t) * eig.values[t] * eig.vectors(j, t);
                CHECK(acc == doctest::Approx(m(i, j)).epsilon(1e-9));
            }
    }
}

}  // TEST_SUITE
