#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "octobil/rational.hpp"

namespace octobil {

enum class VerifyMode { Fuzz, RankLeft, RankRight, Witness, ImageAvoid, Margin };

std::string to_string(VerifyMode mode);

/// An exact pair (x, y) recorded by a verification run, tagged with the trial
/// that produced it.
struct WitnessPair {
    uint64_t trial = 0;
    std::vector<Rational> x, y;
};

/// Outcome of a verification campaign. Fully reproducible from
/// (map, mode, trials, seed, bound): two runs with identical inputs serialize
/// to identical bytes, parallel or not.
struct VerificationReport {
    std::string map_id;
    VerifyMode mode = VerifyMode::Fuzz;
    uint64_t trials = 0;
    uint64_t seed = 0;
    int64_t bound = 0;
    std::vector<WitnessPair> failures;           // empty iff pass
    std::optional<int> min_rank_observed;        // rank modes
    std::optional<int> expected_rank;            // rank modes
    std::optional<double> margin_value;          // margin mode
    std::string detail;

    bool passed() const { return failures.empty(); }

    nlohmann::ordered_json to_json() const;
    std::string json_str() const { return to_json().dump(2) + "\n"; }
    std::string text() const;
};

nlohmann::ordered_json rational_vector_json(const std::vector<Rational>& v);

}  // namespace octobil
