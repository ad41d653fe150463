#include <cstdlib>
#include <iostream>
#include <string>

#include "schub/common.hpp"
#include "schub/selftest.hpp"

// Runs the ten acceptance criteria at full scope, one PASS/FAIL line each.
int main(int argc, char** argv) {
    schub::SelftestOptions opts;
    opts.scope = schub::Scope::Full;
    if (argc > 1 && std::string(argv[1]) == "quick") opts.scope = schub::Scope::Quick;
    if (const char* seed = std::getenv("SCHUB_SEED")) opts.seed = std::stoull(seed);
    int failures = 0;
    opts.on_result = [&](const schub::CriterionResult& r) {
        std::cout << schub::format_result_line(r) << std::endl;
        failures += !r.passed;
    };
    schub::run_selftest(opts);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
