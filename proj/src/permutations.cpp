#include "schub/permutations.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

namespace schub {

namespace {

void require_valid_code(const Code& code) {
    for (int c : code)
        if (c < 0) throw InputError("code entries must be nonnegative");
    if (!code.empty() && code.back() == 0)
        throw InputError("code must not end in a zero entry");
}

Code trimmed(Code code) {
    while (!code.empty() && code.back() == 0) code.pop_back();
    return code;
}

std::vector<int> split_ints(const std::string& text) {
    std::vector<int> out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw InputError("not an integer: '" + token + "'");
        }
        if (used != token.size() || v < -2147483647LL || v > 2147483647LL)
            throw InputError("not an integer: '" + token + "'");
        out.push_back(static_cast<int>(v));
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)))
            flush();
        else
            token.push_back(ch);
    }
    flush();
    return out;
}

std::string strip_prefix(const std::string& text, const std::string& prefix) {
    std::string t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    if (t.rfind(prefix, 0) == 0) t = t.substr(prefix.size());
    if (t == "()" || t == "[]") t.clear();
    return t;
}

}  // namespace

Permutation::Permutation(std::vector<int> window) : w_(std::move(window)) {
    const int m = static_cast<int>(w_.size());
    std::vector<bool> seen(m + 1, false);
    for (int v : w_) {
        if (v < 1 || v > m || seen[v])
            throw InputError("window is not a permutation of 1.." + std::to_string(m));
        seen[v] = true;
    }
    while (!w_.empty() && w_.back() == static_cast<int>(w_.size())) w_.pop_back();
}

int Permutation::operator()(int i) const {
    if (i >= 1 && i <= size()) return w_[i - 1];
    return i;
}

int Permutation::inverse(int value) const {
    if (value >= 1 && value <= size()) {
        for (int i = 0; i < size(); ++i)
            if (w_[i] == value) return i + 1;
    }
    return value;
}

std::string Permutation::str() const {
    if (w_.empty()) return "id";
    bool compact = std::all_of(w_.begin(), w_.end(), [](int v) { return v <= 9; });
    std::string s;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (!compact && i) s += ' ';
        s += std::to_string(w_[i]);
    }
    return s;
}

Diagram::Diagram(int n, std::set<Cell> cells) : n_(n) {
    if (n < 0) throw InputError("grid size must be nonnegative");
    for (const Cell& c : cells) insert(c);
}

void Diagram::insert(Cell c) {
    if (c.row < 1 || c.col < 1 || c.row > n_ || c.col > n_)
        throw InputError("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                         ") outside the " + std::to_string(n_) + "x" + std::to_string(n_) + " grid");
    cells_.insert(c);
}

std::vector<int> Diagram::column_rows(int col) const {
    std::vector<int> rows;
    for (const Cell& c : cells_)
        if (c.col == col) rows.push_back(c.row);
    return rows;
}

std::vector<int> Diagram::row_counts() const {
    std::vector<int> counts(n_, 0);
    for (const Cell& c : cells_) ++counts[c.row - 1];
    return counts;
}

Permutation parse_permutation(const std::string& text) {
    std::string t = strip_prefix(text, "w:");
    if (t == "id" || t.empty()) return Permutation();
    bool digits_only = std::all_of(t.begin(), t.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    std::vector<int> window;
    if (digits_only) {
        for (char ch : t) window.push_back(ch - '0');
    } else {
        window = split_ints(t);
    }
    return Permutation(std::move(window));
}

Code parse_code(const std::string& text) {
    Code code = trimmed(split_ints(strip_prefix(text, "c:")));
    require_valid_code(code);
    return code;
}

Partition parse_partition(const std::string& text) {
    Partition p = trimmed(split_ints(strip_prefix(text, "p:")));
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) throw InputError("partition parts must be nonnegative");
        if (i && p[i] > p[i - 1]) throw InputError("partition parts must weakly decrease");
    }
    return p;
}

std::string format_vector(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::vector<std::int64_t> code_prefix_values(const Code& code) {
    require_valid_code(code);
    std::vector<std::int64_t> w;
    std::vector<std::int64_t> sorted;  // w(1..i-1) increasing
    w.reserve(code.size());
    for (int c : code) {
        // V_t = sorted[t-1] - t counts the unused values below the t-th smallest.
        std::size_t t = 0;
        while (t < sorted.size() && c >= sorted[t] - static_cast<std::int64_t>(t + 1)) ++t;
        std::int64_t value = c + static_cast<std::int64_t>(t) + 1;
        w.push_back(value);
        sorted.insert(sorted.begin() + static_cast<std::ptrdiff_t>(t), value);
    }
    return w;
}

Permutation code_to_permutation(const Code& code) {
    std::vector<std::int64_t> prefix = code_prefix_values(code);
    std::int64_t m = static_cast<std::int64_t>(prefix.size());
    for (auto v : prefix) m = std::max(m, v);
    if (m > 1000000) throw BudgetError("permutation window too large to materialize");
    std::vector<bool> used(m + 1, false);
    std::vector<int> window;
    window.reserve(m);
    for (auto v : prefix) {
        used[v] = true;
        window.push_back(static_cast<int>(v));
    }
    for (std::int64_t v = 1; v <= m; ++v)
        if (!used[v]) window.push_back(static_cast<int>(v));
    return Permutation(std::move(window));
}

Code permutation_to_code(const Permutation& w) {
    const auto& win = w.window();
    Code code(win.size(), 0);
    for (std::size_t i = 0; i < win.size(); ++i)
        for (std::size_t j = i + 1; j < win.size(); ++j)
            if (win[j] < win[i]) ++code[i];
    return trimmed(std::move(code));
}

int code_degree(const Code& code) {
    return std::accumulate(code.begin(), code.end(), 0);
}

Diagram rothe_diagram(const Permutation& w, int n) {
    if (n < w.size())
        throw InputError("grid size " + std::to_string(n) + " truncates the diagram of " + w.str());
    Diagram d(n);
    for (int i = 1; i <= w.size(); ++i)
        for (int j = 1; j < w(i); ++j)
            if (i < w.inverse(j)) d.insert({i, j});
    return d;
}

Diagram rothe_diagram(const Permutation& w) {
    return rothe_diagram(w, w.size());
}

std::set<Cell> essential_set(const Diagram& d) {
    std::set<Cell> ess;
    for (const Cell& c : d.cells())
        if (!d.contains(c.row + 1, c.col) && !d.contains(c.row, c.col + 1)) ess.insert(c);
    return ess;
}

Diagram dominant_component(const Diagram& d) {
    Diagram dom(d.n());
    if (!d.contains(1, 1)) return dom;
    std::queue<Cell> todo;
    todo.push({1, 1});
    dom.insert({1, 1});
    while (!todo.empty()) {
        Cell c = todo.front();
        todo.pop();
        const Cell next[4] = {{c.row + 1, c.col}, {c.row - 1, c.col}, {c.row, c.col + 1}, {c.row, c.col - 1}};
        for (const Cell& nb : next) {
            if (d.contains(nb.row, nb.col) && !dom.contains(nb.row, nb.col)) {
                dom.insert(nb);
                todo.push(nb);
            }
        }
    }
    return dom;
}

std::optional<Cell> accessible_box(const Code& code) {
    std::vector<std::int64_t> w = code_prefix_values(code);
    const std::size_t L = w.size();
    std::int64_t running_min = L ? w[0] : 0;
    std::optional<Cell> z;
    for (std::size_t i = 1; i < L; ++i) {
        // k_i: eastmost box of row i+1, i.e. largest j < w(i+1) not among w(1..i+1).
        std::vector<std::int64_t> nw;
        for (std::size_t j = 0; j <= i; ++j)
            if (w[j] <= w[i]) nw.push_back(w[j]);
        std::sort(nw.begin(), nw.end());
        std::int64_t k = w[i] - 1;
        for (auto it = nw.rbegin() + 1; it != nw.rend() && *it == k; ++it) --k;
        if (k > running_min) z = Cell{static_cast<int>(i + 1), static_cast<int>(k)};
        running_min = std::min(running_min, w[i]);
    }
    return z;
}

std::vector<Cell> pivot_dots(const std::vector<std::int64_t>& prefix, Cell z) {
    std::vector<Cell> nw;
    for (int j = 1; j < z.row && j <= static_cast<int>(prefix.size()); ++j)
        if (prefix[j - 1] < z.col) nw.push_back({j, static_cast<int>(prefix[j - 1])});
    std::vector<Cell> piv;
    for (const Cell& x : nw) {
        bool dominated = std::any_of(nw.begin(), nw.end(), [&](const Cell& y) {
            return y.row > x.row && y.col > x.col;
        });
        if (!dominated) piv.push_back(x);
    }
    return piv;
}

std::vector<Cell> pivots(const Permutation& w, Cell z) {
    Code code = permutation_to_code(w);
    std::optional<Cell> acc = accessible_box(code);
    if (!acc || *acc != z)
        throw InputError("(" + std::to_string(z.row) + "," + std::to_string(z.col) +
                         ") is not the accessible box of " + w.str());
    return pivot_dots(code_prefix_values(code), z);
}

// 2143 search on w(1..L). Past position L the values are increasing, so only
// the last letter of a pattern can sit there, as a value missing from the prefix.
bool is_vexillary(const Code& code) {
    const std::vector<std::int64_t> w = code_prefix_values(code);
    const int L = static_cast<int>(w.size());
    std::vector<std::int64_t> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    auto missing_between = [&](std::int64_t lo, std::int64_t hi) {
        const auto inside = std::lower_bound(sorted.begin(), sorted.end(), hi) - std::upper_bound(sorted.begin(), sorted.end(), lo);
        return hi - lo - 1 > inside;
    };
    for (int a = 0; a < L; ++a) {
        std::int64_t low = std::numeric_limits<std::int64_t>::max();  // min w(b), a < b < c
        for (int c = a + 1; c < L; ++c) {
            if (low < w[a] && w[a] < w[c]) {
                if (missing_between(w[a], w[c])) return false;
                for (int e = c + 1; e < L; ++e)
                    if (w[a] < w[e] && w[e] < w[c]) return false;
            }
            low = std::min(low, w[c]);
        }
    }
    return true;
}

ShapeFlag shape_and_flag(const Code& code) {
    if (!is_vexillary(code)) throw InputError("shape and flag need a vexillary code");
    ShapeFlag sf;
    const int L = static_cast<int>(code.size());
    for (int i = 0; i < L; ++i) {
        if (code[i] == 0) continue;
        sf.lambda.push_back(code[i]);
        int e = i;
        for (int j = i; j < L; ++j)
            if (code[j] >= code[i]) e = j;
        sf.phi.push_back(e + 1);
    }
    std::sort(sf.lambda.begin(), sf.lambda.end(), std::greater<int>());
    std::sort(sf.phi.begin(), sf.phi.end());
    return sf;
}

std::int64_t count_132(const Permutation& w) {
    const int m = w.size();
    std::int64_t count = 0;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int k = j + 1; k <= m; ++k)
                if (w(i) < w(k) && w(k) < w(j)) ++count;
    return count;
}

Permutation grassmannian_for(const Partition& lambda) {
    Partition parts;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0 || (i && lambda[i] > lambda[i - 1]))
            throw InputError("not a partition: " + format_vector(lambda));
        if (lambda[i] > 0) parts.push_back(lambda[i]);
    }
    const int L = static_cast<int>(parts.size());
    if (L == 0) return Permutation();
    const int m = L + parts[0];
    std::vector<int> window;
    std::vector<bool> used(m + 1, false);
    for (int i = 1; i <= L; ++i) {
        int v = i + parts[L - i];
        window.push_back(v);
        used[v] = true;
    }
    for (int v = 1; v <= m; ++v)
        if (!used[v]) window.push_back(v);
    return Permutation(std::move(window));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> window(n);
    std::iota(window.begin(), window.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(window);
    } while (std::next_permutation(window.begin(), window.end()));
    return out;
}

std::string render_rothe(const Permutation& w, const RenderOptions& opts) {
    const int n = w.size();
    Diagram d = rothe_diagram(w, n);
    std::set<Cell> ess;
    if (opts.essential) ess = essential_set(d);
    std::optional<Cell> z;
    if (opts.accessible) z = accessible_box(permutation_to_code(w));
    std::ostringstream out;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            Cell c{i, j};
            if (z && *z == c)
                out << 'z';
            else if (ess.count(c))
                out << 'E';
            else if (d.contains(i, j))
                out << "□";
            else if (w(i) == j)
                out << "•";
            else if (w(i) < j && w.inverse(j) < i)
                out << '+';
            else if (w(i) < j)
                out << '-';
            else if (w.inverse(j) < i)
                out << '|';
            else
                out << '.';
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace schub
