#pragma once

#include <string>
#include <vector>

#include "schub/permutations.hpp"
#include "schub/tableaux.hpp"

namespace schub {

enum class Symbol { Open, Close, Star };
using ColumnWord = std::vector<Symbol>;

std::string to_string(const ColumnWord& word);  // "(", ")", "⋆"

ColumnWord column_word(const Diagram& d, int c, SubsetS s);
int theta(const Diagram& d, SubsetS s);
Tableau greedy_tableau(const Diagram& d, SubsetS s);

// Checks the hyperplane and all 2^n halfspace inequalities directly.
bool membership_bruteforce(const Diagram& d, const std::vector<int>& alpha);

}  // namespace schub
