#include <doctest.h>

#include <cmath>
#include <random>

#include "jointrank/contrasts.hpp"
#include "jointrank/errors.hpp"

using namespace jointrank;

TEST_SUITE("contrasts") {

TEST_CASE("grand mean: k=2 and k=4 coefficient patterns") {
    const auto c2 = grand_mean_contrasts(2);
    CHECK(c2.rows(0, 0) == doctest::Approx(0.5));
    CHECK(c2.rows(0, 1) == doctest::Approx(-0.5));
    CHECK(c2.rows(1, 0) == doctest::Approx(-0.5));
    CHECK(c2.rows(1, 1) == doctest::Approx(0.5));

    const auto c4 = grand_mean_contrasts(4);
    CHECK(c4.m() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(c4.rows(i, j) == doctest::Approx(i == j ? 0.75 : -0.25));
}

TEST_CASE("grand mean rows sum to zero for k=3") {
    const auto c = grand_mean_contrasts(3);
    for (std::size_t i = 0; i < 3; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < 3; ++j) sum += c.rows(i, j);
        CHECK(std::fabs(sum) <= 1e-12);
    }
}

TEST_CASE("dunnett: definition and labels") {
    const auto c4 = dunnett_contrasts(4, {"0", "1", "2", "3"});
    CHECK(c4.m() == 3);
    const double expect[3][4] = {{-1, 1, 0, 0}, {-1, 0, 1, 0}, {-1, 0, 0, 1}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(c4.rows(i, j) == expect[i][j]);
    CHECK(c4.row_labels ==
          std::vector<std::string>{"1 - 0", "2 - 0", "3 - 0"});

    const auto c2 = dunnett_contrasts(2);
    CHECK(c2.m() == 1);
    CHECK(c2.rows(0, 0) == -1.0);
    CHECK(c2.rows(0, 1) == 1.0);
}

TEST_CASE("k < 2 is rejected") {
    CHECK_THROWS_AS(grand_mean_contrasts(1), ValidationError);
    CHECK_THROWS_AS(dunnett_contrasts(1), ValidationError);
}

TEST_CASE("weighted grand mean equals unweighted on balanced designs") {
    const auto w = grand_mean_contrasts_weighted({7, 7, 7});
    const auto u = grand_mean_contrasts(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(w.rows(i, j) == doctest::Approx(u.rows(i, j)).epsilon(1e-14));
}

TEST_CASE("property: zero row sums and annihilation of constant vectors") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> kd(2, 12);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t k = std::size_t(kd(rng));
        for (const auto& cm : {grand_mean_contrasts(k), dunnett_contrasts(k)}) {
            const std::vector<double> constant(k, 3.7);
            const auto img = matvec(cm.rows, constant);
            for (std::size_t i = 0; i < cm.m(); ++i) {
                double sum = 0.0;
                double norm = 0.0;
                for (std::size_t j = 0; j < k; ++j) {
                    sum += cm.rows(i, j);
                    norm += cm.rows(i, j) * cm.rows(i, j);
                }
                CHECK(std::fabs(sum) <= 1e-12);
                CHECK(norm > 0.0);
                CHECK(std::fabs(img[i]) <= 1e-12);
            }
        }
    }
}

}  // TEST_SUITE
