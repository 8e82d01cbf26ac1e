#pragma once

#include "bigalg/lie.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bigalg {

struct AcceptanceOptions {
    std::uint64_t seed = 0;
    std::string cache_dir;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::vector<std::string> details;
    double seconds = 0;
};

inline constexpr int kCriterionCount = 12;

/// sl_2: n = 1..6; sl_3: w1, w2, 2w1, 3w1, w1+w2, 2w1+w2; sl_4: w1, w2.
std::vector<Weight> acceptance_battery();
CriterionResult run_criterion(int id, const AcceptanceOptions& opts);

}  // namespace bigalg
