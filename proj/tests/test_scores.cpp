#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "jointrank/errors.hpp"
#include "jointrank/scores.hpp"
#include "support/generators.hpp"

using namespace jointrank;

TEST_SUITE("scores") {

TEST_CASE("midranks: ties get the mean of their positions") {
    CHECK(midranks(std::vector<double>{1.2, 3.4, 3.4, 5.0}) ==
          std::vector<double>{1.0, 2.5, 2.5, 4.0});
    CHECK(midranks(std::vector<double>{7.0}) == std::vector<double>{1.0});
    CHECK(midranks(std::vector<double>{5.0, 5.0, 5.0}) == std::vector<double>{2.0, 2.0, 2.0});
}

TEST_CASE("ansari: folded ranks") {
    CHECK(ansari_scores(std::vector<double>{10, 20, 30, 40, 50}) ==
          std::vector<double>{1, 2, 3, 2, 1});
    CHECK(ansari_scores(std::vector<double>{10, 20, 30, 40}) ==
          std::vector<double>{1, 2, 2, 1});
    CHECK(ansari_scores(std::vector<double>{2, 2}) == std::vector<double>{1.5, 1.5});
}

TEST_CASE("savage: cumulative scores with tie averaging") {
    const auto s3 = savage_scores(std::vector<double>{1, 2, 3});
    CHECK(s3[0] == doctest::Approx(-2.0 / 3));
    CHECK(s3[1] == doctest::Approx(-1.0 / 6));
    CHECK(s3[2] == doctest::Approx(5.0 / 6));
    CHECK(savage_scores(std::vector<double>{42.0}) == std::vector<double>{0.0});
    const auto pair = savage_scores(std::vector<double>{3, 3});
    CHECK(pair[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(pair[1] == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("empty input is rejected") {
    CHECK_THROWS_AS(midranks(std::vector<double>{}), ValidationError);
    CHECK_THROWS_AS(ansari_scores(std::vector<double>{}), ValidationError);
    CHECK_THROWS_AS(savage_scores(std::vector<double>{}), ValidationError);
}

TEST_CASE("property: monotone invariance of all three transforms") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 200; ++rep) {
        const auto raw = generators::raw_dataset(rng);
        const auto transformed = generators::monotone_transform(rng, raw.values);
        const ScoreSet a = compute_scores(raw.values);
        const ScoreSet b = compute_scores(transformed);
        CHECK(a.midrank == b.midrank);
        CHECK(a.ansari == b.ansari);
        CHECK(a.savage == b.savage);
    }
}

TEST_CASE("property: permutation equivariance") {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 200; ++rep) {
        auto raw = generators::raw_dataset(rng);
        const ScoreSet orig = compute_scores(raw.values);
        std::vector<std::size_t> perm(raw.values.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<double> shuffled(raw.values.size());
        for (std::size_t i = 0; i < perm.size(); ++i) shuffled[i] = raw.values[perm[i]];
        const ScoreSet after = compute_scores(shuffled);
        for (std::size_t i = 0; i < perm.size(); ++i) {
            CHECK(after.midrank[i] == orig.midrank[perm[i]]);
            CHECK(after.ansari[i] == orig.ansari[perm[i]]);
            CHECK(after.savage[i] == orig.savage[perm[i]]);
        }
    }
}

TEST_CASE("property: structural invariants of the score set") {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 200; ++rep) {
        const auto raw = generators::raw_dataset(rng);
        const std::size_t n = raw.values.size();
        const ScoreSet s = compute_scores(raw.values);

        double rank_sum = 0.0, savage_sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            rank_sum += s.midrank[i];
            savage_sum += s.savage[i];
            CHECK(s.midrank[i] >= 1.0);
            CHECK(s.midrank[i] <= double(n));
            CHECK(s.ansari[i] >= 1.0 - 1e-12);
            CHECK(s.ansari[i] <= 0.5 * double(n + 1) + 1e-12);
        }
        CHECK(rank_sum == doctest::Approx(0.5 * double(n) * double(n + 1)).epsilon(1e-12));
        CHECK(std::fabs(savage_sum) <= 1e-10 * double(n));

        // untied data: mid-ranks are a permutation of 1..N
        bool untied = true;
        for (std::size_t t : s.tie_pattern)
            if (t > 1) untied = false;
        if (untied) {
            auto sorted = s.midrank;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < n; ++i) CHECK(sorted[i] == double(i + 1));
        }
    }
}

}  // TEST_SUITE
