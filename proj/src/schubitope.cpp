#include "schub/schubitope.hpp"

#include <numeric>

namespace schub {

namespace {

void require_column(const Diagram& d, int c) {
    if (c < 1 || c > d.n()) throw InputError("column " + std::to_string(c) + " outside [n]");
}

// Word of column c with the row contributing each symbol.
std::vector<std::pair<Symbol, int>> column_symbols(const Diagram& d, int c, SubsetS s) {
    std::vector<std::pair<Symbol, int>> out;
    for (int r = 1; r <= d.n(); ++r) {
        const bool in_d = d.contains(r, c);
        const bool in_s = s.contains(r);
        if (in_d && in_s)
            out.push_back({Symbol::Star, r});
        else if (in_d)
            out.push_back({Symbol::Close, r});
        else if (in_s)
            out.push_back({Symbol::Open, r});
    }
    return out;
}

}  // namespace

std::string to_string(const ColumnWord& word) {
    std::string s;
    for (Symbol sym : word) {
        switch (sym) {
            case Symbol::Open: s += "("; break;
            case Symbol::Close: s += ")"; break;
            case Symbol::Star: s += "⋆"; break;
        }
    }
    return s;
}

ColumnWord column_word(const Diagram& d, int c, SubsetS s) {
    require_column(d, c);
    ColumnWord word;
    for (const auto& [sym, row] : column_symbols(d, c, s)) word.push_back(sym);
    return word;
}

Tableau greedy_tableau(const Diagram& d, SubsetS s) {
    Tableau t(d);
    for (int c = 1; c <= d.n(); ++c) {
        std::vector<int> open_rows;
        for (const auto& [sym, row] : column_symbols(d, c, s)) {
            if (sym == Symbol::Star) {
                t.set({row, c}, row);
            } else if (sym == Symbol::Open) {
                open_rows.push_back(row);
            } else if (!open_rows.empty()) {
                t.set({row, c}, open_rows.back());
                open_rows.pop_back();
            }
        }
    }
    return t;
}

int theta(const Diagram& d, SubsetS s) {
    int total = 0;
    for (int c = 1; c <= d.n(); ++c) {
        int open = 0;
        for (Symbol sym : column_word(d, c, s)) {
            if (sym == Symbol::Star) {
                ++total;
            } else if (sym == Symbol::Open) {
                ++open;
            } else if (open > 0) {
                --open;
                ++total;
            }
        }
    }
    return total;
}

bool membership_bruteforce(const Diagram& d, const std::vector<int>& alpha) {
    const int n = d.n();
    if (n > budgets().subset_n || n > 31)
        throw BudgetError("n = " + std::to_string(n) + " is too large for subset enumeration; use the LP decision");
    std::vector<int> a = alpha;
    for (std::size_t i = n; i < a.size(); ++i)
        if (a[i] != 0) return false;
    a.resize(n, 0);
    for (int v : a)
        if (v < 0) return false;
    if (std::accumulate(a.begin(), a.end(), 0LL) != d.size()) return false;
    const std::uint32_t limit = n == 0 ? 1u : (std::uint32_t{1} << n);
    for (std::uint32_t bits = 1; bits < limit; ++bits) {
        long long lhs = 0;
        for (int i = 0; i < n; ++i)
            if ((bits >> i) & 1u) lhs += a[i];
        if (lhs > theta(d, SubsetS{bits})) return false;
    }
    return true;
}

}  // namespace schub
