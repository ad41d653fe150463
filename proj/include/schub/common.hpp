#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace schub {

// Malformed or out-of-contract input.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An enumeration oracle or expansion exceeded its configured budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Budgets {
    int enumeration_cells = 12;      // enumerate_fcitab and friends
    int oracle_n = 8;                // schubert_divided_diff
    int partition_size = 30;         // flagged_schur, enumerate_flagged_ssyt, kostka
    std::int64_t tree_nodes = 1000000;
    int subset_n = 20;               // membership_bruteforce
    int tu_columns = 12;             // check_total_unimodularity
};

// Process-wide budget configuration. Read at call time by the oracles.
Budgets& budgets();

// Parses "key=value,key=value" (keys as in Budgets) into budgets().
void configure_budgets(const std::string& text);

}  // namespace schub
