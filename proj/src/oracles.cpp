#include "schub/oracles.hpp"

#include <functional>
#include <numeric>

namespace schub::oracle {

std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    if (parts == 0) {
        if (total == 0) out.emplace_back();
        return out;
    }
    std::vector<int> cur(static_cast<std::size_t>(parts), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == parts - 1) {
            cur[static_cast<std::size_t>(i)] = left;
            out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, total);
    return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        out.push_back(cur);
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(max_size, max_size);
    return out;
}

bool has_01_point(const Diagram& d, const std::vector<int>& alpha) {
    const int n = d.n();
    std::vector<int> target(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (static_cast<int>(i) < n) {
            target[i] = alpha[i];
        } else if (alpha[i] != 0) {
            return false;
        }
    }
    // Column subsets allowed by the flag conditions of each column.
    std::vector<std::vector<unsigned>> choices(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            bool ok = true;
            int chosen = 0, needed = 0;
            for (int s = 1; s <= n && ok; ++s) {
                if (mask & (1u << (s - 1))) ++chosen;
                if (d.contains(s, j)) ++needed;
                ok = chosen >= needed;
            }
            if (ok) choices[static_cast<std::size_t>(j - 1)].push_back(mask);
        }
    }
    std::vector<int> used(static_cast<std::size_t>(n), 0);
    std::function<bool(int)> rec = [&](int j) {
        if (j == n) return used == target;
        for (unsigned mask : choices[static_cast<std::size_t>(j)]) {
            bool ok = true;
            for (int i = 0; i < n; ++i) {
                if (mask & (1u << i)) {
                    ++used[static_cast<std::size_t>(i)];
                    if (used[static_cast<std::size_t>(i)] > target[static_cast<std::size_t>(i)]) ok = false;
                }
            }
            if (ok && rec(j + 1)) return true;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) --used[static_cast<std::size_t>(i)];
        }
        return false;
    };
    return rec(0);
}

bool contains_2143(const Permutation& w) {
    const int m = w.size();
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            for (int c = b + 1; c <= m; ++c)
                for (int e = c + 1; e <= m; ++e)
                    if (w(b) < w(a) && w(a) < w(e) && w(e) < w(c)) return true;
    return false;
}

Permutation swap_positions(const Permutation& w, int a, int b) {
    const int m = std::max({w.size(), a, b});
    std::vector<int> v(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) v[static_cast<std::size_t>(i - 1)] = w(i);
    std::swap(v[static_cast<std::size_t>(a - 1)], v[static_cast<std::size_t>(b - 1)]);
    return Permutation(std::move(v));
}

int max_fci_preimage(const Diagram& d, SubsetS s) {
    int total = 0;
    for (int c = 1; c <= d.n(); ++c) {
        const std::vector<int> rows = d.column_rows(c);
        std::vector<bool> taken(static_cast<std::size_t>(d.n()) + 1, false);
        std::function<int(std::size_t)> best = [&](std::size_t k) {
            if (k == rows.size()) return 0;
            int result = best(k + 1);  // leave the cell outside S
            for (int label = 1; label <= rows[k]; ++label) {
                if (!s.contains(label) || taken[static_cast<std::size_t>(label)]) continue;
                taken[static_cast<std::size_t>(label)] = true;
                result = std::max(result, 1 + best(k + 1));
                taken[static_cast<std::size_t>(label)] = false;
            }
            return result;
        };
        total += best(0);
    }
    return total;
}

Diagram rothe_by_definition(const Permutation& w, int n) {
    Diagram d(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            bool covered = w(i) <= j;  // east ray of the dot in row i, or the dot
            for (int h = 1; h <= i && !covered; ++h) covered = w(h) == j;  // south ray of column j
            if (!covered) d.insert({i, j});
        }
    }
    return d;
}

std::set<Cell> essential_by_rank(const Permutation& w) {
    std::set<Cell> ess;
    const int n = std::max(w.size(), 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (w(i) > j && w.inverse(j) > i && w(i + 1) <= j && w.inverse(j + 1) <= i) ess.insert({i, j});
    return ess;
}

}  // namespace schub::oracle
