#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jointrank/marginal.hpp"

namespace jointrank {

enum class TestId { joint, nonpar_mctp, kruskal_wallis };

std::string test_id_name(TestId id);
TestId test_id_from_name(const std::string& name);

struct ScenarioConfig {
    std::string name = "custom";
    std::size_t k = 4;
    std::size_t n_per_group = 20;
    // (skewness, excess kurtosis) for the power-method generator; nullopt = normal
    std::optional<std::pair<double, double>> fleishman;
    std::vector<double> location_shift;    // size k; empty means all zero
    std::vector<double> scale_multiplier;  // size k; empty means all one
    double alpha = 0.05;
    std::size_t n_replicates = 10'000;
    std::uint64_t seed = 1;
    std::size_t kw_permutations = 0;  // 0: asymptotic chi-square p-value
    double mvt_accuracy = 2e-3;
    DfPolicy df_policy = DfPolicy::paper;
    MeatCorrection meat_correction = MeatCorrection::leverage_squared;
    int threads = 0;  // 0: JOINTRANK_THREADS or hardware
};

struct TestPower {
    TestId id = TestId::joint;
    std::size_t rejections = 0;
    std::size_t failures = 0;
    double proportion = 0.0;
    double mc_se = 0.0;
};

struct PowerReport {
    ScenarioConfig scenario;
    std::vector<TestPower> tests;
};

// Monte Carlo size/power study; deterministic for a fixed config independent
// of the worker count.
PowerReport run_power_study(const ScenarioConfig& cfg, const std::vector<TestId>& tests);

std::vector<std::string> preset_names();
ScenarioConfig preset_scenario(const std::string& name);

}  // namespace jointrank
