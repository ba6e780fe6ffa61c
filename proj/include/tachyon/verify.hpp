#pragma once

// Randomized and exhaustive property suites behind `tachyon verify`.

#include "tachyon/amplitudes.hpp"
#include "tachyon/kinematics.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace tachyon {

struct VerifyConfig {
    UnitSystem units;
    double tol = kDefaultTolerance;
    std::uint64_t seed = 7;
    int trials = 100;
    SignChoice sign = SignChoice::minus;
    double A_exp = 2.0;
    Complex alpha{0.0, 1.0};
    bool expect_fail = false;
};

enum class Comparison {
    below, ///< worst (largest) residual must stay under the threshold
    above, ///< worst (smallest) residual must exceed the threshold
    exact, ///< residual must be exactly zero
};

struct CheckResult {
    std::string check;
    nlohmann::json parameters = nlohmann::json::object();
    Comparison comparison = Comparison::below;
    double max_residual = 0.0; ///< worst case in the sense of `comparison`
    double threshold = 0.0;
    std::uint64_t samples = 0;
    nlohmann::json witnesses = nlohmann::json::array();

    bool passed() const;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    int trials = 0;
    bool expect_fail = false;
    std::vector<CheckResult> checks;

    bool passed() const;
    nlohmann::json to_json() const;
};

const char* to_string(Comparison c);

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs "kinematics", "fourvectors", "axioms", "appendixB" or "all".
/// trials = 0 yields an empty, passing report. Throws std::invalid_argument
/// for an unknown suite or a negative trial count.
VerifyReport run_suite(const std::string& suite, const VerifyConfig& config);

} // namespace tachyon
