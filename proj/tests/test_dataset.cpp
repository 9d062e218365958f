#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "jointrank/dataset.hpp"
#include "jointrank/errors.hpp"
#include "support/generators.hpp"

using namespace jointrank;

namespace {
const std::string kDataDir = JOINTRANK_DATA_DIR;
}

TEST_SUITE("dataset") {

TEST_CASE("loads a small CSV in file order") {
    std::istringstream in("v,g\n1,A\n2,A\n3,B\n4,B\n");
    const Dataset ds = Dataset::load_csv(in, "v", "g");
    CHECK(ds.size() == 4);
    CHECK(ds.n_groups() == 2);
    CHECK(ds.group_labels() == std::vector<std::string>{"A", "B"});
    CHECK(ds.values()[2] == 3.0);
    CHECK(ds.group_index()[3] == 1);
}

TEST_CASE("reaction fixture: four groups of ten") {
    std::ifstream in(kDataDir + "/reaction.csv");
    REQUIRE(in.good());
    const Dataset ds = Dataset::load_csv(in, "Time", "Group");
    CHECK(ds.size() == 40);
    CHECK(ds.n_groups() == 4);
    CHECK(ds.group_labels() == std::vector<std::string>{"0", "1", "2", "3"});
    std::size_t total = 0;
    for (auto n : ds.group_sizes()) {
        CHECK(n == 10);
        total += n;
    }
    CHECK(total == ds.size());
    const auto sums = summarize(ds);
    CHECK(sums.size() == 4);
    for (const auto& s : sums) CHECK(s.n == 10);
}

TEST_CASE("parse error carries the data row index") {
    std::istringstream in("v,g\n1,A\nx,A\n3,B\n4,B\n");
    try {
        Dataset::load_csv(in, "v", "g");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.row() == 2);
    }
}

TEST_CASE("schema and validation errors") {
    std::istringstream missing("v,g\n1,A\n");
    CHECK_THROWS_AS(Dataset::load_csv(missing, "value", "g"), SchemaError);
    std::istringstream small("v,g\n1,A\n2,A\n3,B\n");
    CHECK_THROWS_AS(Dataset::load_csv(small, "v", "g"), ValidationError);
    std::istringstream one_group("v,g\n1,A\n2,A\n");
    CHECK_THROWS_AS(Dataset::load_csv(one_group, "v", "g"), ValidationError);
    CHECK_THROWS_AS(
        Dataset::from_observations({1.0, std::numeric_limits<double>::quiet_NaN(), 2.0, 3.0},
                                   {"A", "A", "B", "B"}),
        ValidationError);
}

TEST_CASE("explicit group order overrides first appearance") {
    std::istringstream in("v,g\n1,A\n2,A\n3,B\n4,B\n");
    const Dataset ds = Dataset::load_csv(in, "v", "g",
                                         std::vector<std::string>{"B", "A"});
    CHECK(ds.group_labels() == std::vector<std::string>{"B", "A"});
    CHECK(ds.group_index()[0] == 1);
}

TEST_CASE("summaries: hand arithmetic and degenerate variance") {
    const Dataset ds = Dataset::from_observations({1, 2, 3, 4}, {"A", "A", "B", "B"});
    const auto s = summarize(ds);
    CHECK(s[0].mean == doctest::Approx(1.5));
    CHECK(s[0].variance == doctest::Approx(0.5));
    CHECK(s[1].mean == doctest::Approx(3.5));
    CHECK(s[1].variance == doctest::Approx(0.5));

    const Dataset flat = Dataset::from_observations({7, 7, 7, 7}, {"A", "A", "B", "B"});
    for (const auto& g : summarize(flat)) CHECK(g.variance == 0.0);
}

TEST_CASE("property: csv round-trip preserves observations and order") {
    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 50; ++rep) {
        const Dataset ds = generators::random_dataset(rng);
        std::stringstream buf;
        ds.to_csv(buf);
        const Dataset back = Dataset::load_csv(buf, "value", "group");
        REQUIRE(back.size() == ds.size());
        CHECK(back.group_labels() == ds.group_labels());
        for (std::size_t i = 0; i < ds.size(); ++i) {
            CHECK(back.values()[i] == ds.values()[i]);
            CHECK(back.group_index()[i] == ds.group_index()[i]);
        }
    }
}

TEST_CASE("property: group sizes sum to N") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 50; ++rep) {
        const Dataset ds = generators::random_dataset(rng);
        std::size_t total = 0;
        for (auto n : ds.group_sizes()) total += n;
        CHECK(total == ds.size());
    }
}

}  // TEST_SUITE
