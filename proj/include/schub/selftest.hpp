#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace schub {

enum class Scope { Quick, Full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct SelftestOptions {
    Scope scope = Scope::Full;
    std::uint64_t seed = 20240611;
    std::function<void(const CriterionResult&)> on_result;  // called as each criterion finishes
};

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const SelftestOptions& opts);
std::vector<CriterionResult> run_selftest(const SelftestOptions& opts);
std::string format_result_line(const CriterionResult& r);

}  // namespace schub
