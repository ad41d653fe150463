#include "schub/lp.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace schub {

std::string to_string(const Rational& q) { return q.get_str(); }

void FeasibilitySystem::add_row(SparseRow row, RowKind kind, Rational b) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
    SparseRow merged;
    for (auto& [col, v] : row) {
        if (col < 0 || col >= cols) throw std::invalid_argument("add_row: column out of range");
        if (!merged.empty() && merged.back().first == col) {
            merged.back().second += v;
        } else {
            merged.emplace_back(col, std::move(v));
        }
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    rows.push_back(std::move(merged));
    kinds.push_back(kind);
    rhs.push_back(std::move(b));
}

Rational FeasibilitySystem::at(int row, int col) const {
    const SparseRow& r = rows.at(static_cast<std::size_t>(row));
    auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, int c) { return e.first < c; });
    if (it != r.end() && it->first == col) return it->second;
    return 0;
}

std::vector<std::vector<Rational>> FeasibilitySystem::dense() const {
    std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(static_cast<std::size_t>(cols)));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto& [c, v] : rows[r]) m[r][static_cast<std::size_t>(c)] = v;
    }
    return m;
}

bool FeasibilitySystem::satisfied_by(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != cols) return false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Rational lhs = 0;
        for (const auto& [c, v] : rows[r]) lhs += v * x[static_cast<std::size_t>(c)];
        if (kinds[r] == RowKind::Equal ? lhs != rhs[r] : lhs > rhs[r]) return false;
    }
    return true;
}

std::string to_lp_text(const FeasibilitySystem& sys) {
    std::ostringstream out;
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        if (sys.rows[r].empty()) out << "0";
        bool first = true;
        for (const auto& [c, v] : sys.rows[r]) {
            if (!first) out << ' ';
            first = false;
            out << (v > 0 ? "+" : "") << to_string(v) << '*' << sys.names[static_cast<std::size_t>(c)];
        }
        out << (sys.kinds[r] == RowKind::Equal ? " = " : " <= ") << to_string(sys.rhs[r]) << '\n';
    }
    return out.str();
}

namespace {

// a - f*b with column `drop` removed; both inputs sorted.
SparseRow combine(const SparseRow& a, const Rational& f, const SparseRow& b, int drop) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int ca = i < a.size() ? a[i].first : INT32_MAX;
        int cb = j < b.size() ? b[j].first : INT32_MAX;
        if (ca < cb) {
            if (ca != drop) out.push_back(a[i]);
            ++i;
        } else if (cb < ca) {
            if (cb != drop) out.emplace_back(cb, -f * b[j].second);
            ++j;
        } else {
            if (ca != drop) {
                Rational v = a[i].second - f * b[j].second;
                if (v != 0) out.emplace_back(ca, std::move(v));
            }
            ++i;
            ++j;
        }
    }
    return out;
}

const Rational* find_entry(const SparseRow& r, int col) {
    auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, int c) { return e.first < c; });
    return (it != r.end() && it->first == col) ? &it->second : nullptr;
}

struct Bound {
    bool has_lower = false, has_upper = false;
    Rational lower, upper;
};

enum class Shift { Lower, Upper, Free };

struct VarMap {
    Shift kind = Shift::Lower;
    int col = 0;  // first structural column; Free uses col and col+1
    Rational offset;
};

// Tableau rows read x_B(r) + sum_j T[r][j] x_j = beta[r] over nonbasic j.
class Phase1 {
public:
    Phase1(int columns, std::vector<bool> has_upper, std::vector<Rational> upper, std::vector<bool> artificial)
        : has_upper_(std::move(has_upper)), upper_(std::move(upper)), artificial_(std::move(artificial)),
          at_upper_(static_cast<std::size_t>(columns), false), where_(static_cast<std::size_t>(columns), -1) {}

    void add_row(SparseRow t, int basic, Rational beta) {
        where_[static_cast<std::size_t>(basic)] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(t));
        basis_.push_back(basic);
        beta_.push_back(std::move(beta));
    }

    bool run(long& pivots) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (artificial_[static_cast<std::size_t>(basis_[r])]) cost_ = combine(cost_, 1, rows_[r], -1);
        }
        while (true) {
            int e = choose_entering();
            if (e < 0) break;
            degenerate_run_ = step(e) ? 0 : degenerate_run_ + 1;
            ++pivots;
        }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (artificial_[static_cast<std::size_t>(basis_[r])] && beta_[r] != 0) return false;
        }
        return true;
    }

    Rational value(int col) const {
        int r = where_[static_cast<std::size_t>(col)];
        if (r >= 0) return beta_[static_cast<std::size_t>(r)];
        return at_upper_[static_cast<std::size_t>(col)] ? upper_[static_cast<std::size_t>(col)] : Rational(0);
    }

private:
    bool movable(int col) const {
        auto c = static_cast<std::size_t>(col);
        return !artificial_[c] && !(has_upper_[c] && upper_[c] == 0);
    }

    // Dantzig pricing, switching to Bland's rule during long degenerate runs so
    // that no basis repeats between two improving steps.
    int choose_entering() const {
        const bool bland = degenerate_run_ >= kDegenerateLimit;
        int best = -1;
        Rational best_score;
        for (const auto& [col, d] : cost_) {
            if (!movable(col)) continue;
            bool up = at_upper_[static_cast<std::size_t>(col)];
            if ((!up && d < 0) || (up && d > 0)) {
                if (bland) return col;
                Rational score = abs(d);
                if (best < 0 || score > best_score) {
                    best = col;
                    best_score = std::move(score);
                }
            }
        }
        return best;
    }

    // Returns true when the step length is positive.
    bool step(int e) {
        const auto ue = static_cast<std::size_t>(e);
        const int dir = at_upper_[ue] ? -1 : 1;
        bool bounded = false;
        Rational best;
        int leave = -1;
        std::vector<std::pair<std::size_t, Rational>> moves;  // row, change per unit step
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational* a = find_entry(rows_[r], e);
            if (a == nullptr) continue;
            Rational g = dir > 0 ? Rational(-*a) : Rational(*a);
            auto b = static_cast<std::size_t>(basis_[r]);
            Rational limit;
            bool has_limit = false;
            if (g < 0) {
                limit = beta_[r] / -g;
                has_limit = true;
            } else if (has_upper_[b]) {
                limit = (upper_[b] - beta_[r]) / g;
                has_limit = true;
            }
            if (has_limit && (!bounded || limit < best || (limit == best && basis_[r] < basis_[static_cast<std::size_t>(leave)]))) {
                best = limit;
                leave = static_cast<int>(r);
                bounded = true;
            }
            moves.emplace_back(r, std::move(g));
        }
        bool flip = false;
        if (has_upper_[ue] && (!bounded || upper_[ue] <= best)) {
            best = upper_[ue];
            flip = true;
            bounded = true;
        }
        if (!bounded) throw std::logic_error("lp_feasible: phase-1 objective unbounded");

        const bool improving = best > 0;
        for (auto& [r, g] : moves) beta_[r] += g * best;
        if (flip) {
            at_upper_[ue] = !at_upper_[ue];
            return improving;
        }

        auto r = static_cast<std::size_t>(leave);
        const int l = basis_[r];
        const auto ul = static_cast<std::size_t>(l);
        Rational pivot = *find_entry(rows_[r], e);
        Rational entering_value = at_upper_[ue] ? Rational(upper_[ue] - best) : best;
        at_upper_[ul] = has_upper_[ul] && beta_[r] == upper_[ul];
        at_upper_[ue] = false;

        SparseRow prow;
        prow.reserve(rows_[r].size());
        bool inserted = artificial_[ul];  // artificials are fixed at zero once they leave
        for (const auto& [c, v] : rows_[r]) {
            if (!inserted && l < c) {
                prow.emplace_back(l, 1 / pivot);
                inserted = true;
            }
            if (c != e) prow.emplace_back(c, v / pivot);
        }
        if (!inserted) prow.emplace_back(l, 1 / pivot);

        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r) continue;
            const Rational* f = find_entry(rows_[i], e);
            if (f != nullptr) rows_[i] = combine(rows_[i], Rational(*f), prow, e);
        }
        if (const Rational* f = find_entry(cost_, e)) cost_ = combine(cost_, Rational(*f), prow, e);

        rows_[r] = std::move(prow);
        beta_[r] = std::move(entering_value);
        basis_[r] = e;
        where_[ul] = -1;
        where_[ue] = static_cast<int>(r);
        return improving;
    }

    static constexpr int kDegenerateLimit = 50;
    int degenerate_run_ = 0;

    std::vector<bool> has_upper_;
    std::vector<Rational> upper_;
    std::vector<bool> artificial_;
    std::vector<bool> at_upper_;
    std::vector<int> where_;
    std::vector<SparseRow> rows_;
    std::vector<int> basis_;
    std::vector<Rational> beta_;
    SparseRow cost_;
};

}  // namespace

LpResult lp_feasible(const FeasibilitySystem& sys) {
    LpResult result;
    const auto n = static_cast<std::size_t>(sys.cols);

    std::vector<Bound> bounds(n);
    std::vector<std::size_t> general;
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        const SparseRow& row = sys.rows[r];
        const Rational& b = sys.rhs[r];
        const bool eq = sys.kinds[r] == RowKind::Equal;
        if (row.empty()) {
            if (eq ? b != 0 : b < 0) return result;
            continue;
        }
        if (row.size() > 1) {
            general.push_back(r);
            continue;
        }
        auto [c, a] = row.front();
        Bound& bd = bounds[static_cast<std::size_t>(c)];
        Rational v = b / a;
        if (eq || a > 0) {
            if (!bd.has_upper || v < bd.upper) bd.upper = v;
            bd.has_upper = true;
        }
        if (eq || a < 0) {
            if (!bd.has_lower || v > bd.lower) bd.lower = v;
            bd.has_lower = true;
        }
    }

    std::vector<VarMap> vars(n);
    std::vector<bool> has_upper;
    std::vector<Rational> upper;
    int columns = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const Bound& bd = bounds[j];
        if (bd.has_lower && bd.has_upper && bd.lower > bd.upper) return result;
        VarMap& vm = vars[j];
        vm.col = columns;
        if (bd.has_lower) {
            vm.kind = Shift::Lower;
            vm.offset = bd.lower;
            has_upper.push_back(bd.has_upper);
            upper.push_back(bd.has_upper ? Rational(bd.upper - bd.lower) : Rational(0));
            columns += 1;
        } else if (bd.has_upper) {
            vm.kind = Shift::Upper;
            vm.offset = bd.upper;
            has_upper.push_back(false);
            upper.emplace_back(0);
            columns += 1;
        } else {
            vm.kind = Shift::Free;
            for (int k = 0; k < 2; ++k) {
                has_upper.push_back(false);
                upper.emplace_back(0);
            }
            columns += 2;
        }
    }
    const int structural = columns;

    struct Pending {
        SparseRow coeffs;
        Rational rhs;
        int slack = -1;
    };
    std::vector<Pending> pending;
    for (std::size_t r : general) {
        Pending p;
        p.rhs = sys.rhs[r];
        for (const auto& [c, a] : sys.rows[r]) {
            const VarMap& vm = vars[static_cast<std::size_t>(c)];
            switch (vm.kind) {
            case Shift::Lower:
                p.coeffs.emplace_back(vm.col, a);
                p.rhs -= a * vm.offset;
                break;
            case Shift::Upper:
                p.coeffs.emplace_back(vm.col, -a);
                p.rhs -= a * vm.offset;
                break;
            case Shift::Free:
                p.coeffs.emplace_back(vm.col, a);
                p.coeffs.emplace_back(vm.col + 1, -a);
                break;
            }
        }
        std::sort(p.coeffs.begin(), p.coeffs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        if (sys.kinds[r] == RowKind::LessEq) {
            p.slack = columns++;
            has_upper.push_back(false);
            upper.emplace_back(0);
            p.coeffs.emplace_back(p.slack, 1);
        }
        if (p.rhs < 0) {
            p.rhs = -p.rhs;
            for (auto& e : p.coeffs) e.second = -e.second;
        }
        pending.push_back(std::move(p));
    }

    std::vector<int> basics;
    for (auto& p : pending) {
        if (p.slack >= 0 && p.coeffs.back().second > 0) {
            basics.push_back(p.slack);
        } else {
            basics.push_back(columns++);
            has_upper.push_back(false);
            upper.emplace_back(0);
        }
    }
    std::vector<bool> artificial(static_cast<std::size_t>(columns), false);
    for (int c = structural; c < columns; ++c) artificial[static_cast<std::size_t>(c)] = true;
    for (auto& p : pending) {
        if (p.slack >= 0) artificial[static_cast<std::size_t>(p.slack)] = false;
    }

    Phase1 solver(columns, has_upper, upper, artificial);
    for (std::size_t i = 0; i < pending.size(); ++i) {
        SparseRow t;
        for (auto& e : pending[i].coeffs) {
            if (e.first != basics[i]) t.push_back(std::move(e));
        }
        solver.add_row(std::move(t), basics[i], std::move(pending[i].rhs));
    }
    if (!solver.run(result.pivots)) return result;

    result.feasible = true;
    result.point.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const VarMap& vm = vars[j];
        switch (vm.kind) {
        case Shift::Lower:
            result.point[j] = vm.offset + solver.value(vm.col);
            break;
        case Shift::Upper:
            result.point[j] = vm.offset - solver.value(vm.col);
            break;
        case Shift::Free:
            result.point[j] = solver.value(vm.col) - solver.value(vm.col + 1);
            break;
        }
    }
    return result;
}

namespace {

std::vector<int> checked_alpha(const std::vector<int>& alpha, int n) {
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0) throw InputError("alpha has a negative entry");
        if (static_cast<int>(i) >= n) {
            if (alpha[i] != 0) throw InputError("alpha is nonzero beyond row " + std::to_string(n));
        } else {
            a[i] = alpha[i];
        }
    }
    return a;
}

std::string var_name(int i, int j) { return "x_" + std::to_string(i) + "_" + std::to_string(j); }

// Shared shape of P and Q: m rows, one column group per entry of row_sets.
FeasibilitySystem build_system(int m, const std::vector<int>& weights, const std::vector<std::vector<int>>& row_sets,
                               const std::vector<int>& alpha) {
    const int groups = static_cast<int>(row_sets.size());
    FeasibilitySystem sys;
    sys.cols = m * groups;
    auto var = [m](int i, int k) { return (k - 1) * m + (i - 1); };
    for (int k = 1; k <= groups; ++k) {
        for (int i = 1; i <= m; ++i) sys.names.push_back(var_name(i, k));
    }
    for (int v = 0; v < sys.cols; ++v) sys.add_row({{v, -1}}, RowKind::LessEq, 0);
    for (int v = 0; v < sys.cols; ++v) sys.add_row({{v, 1}}, RowKind::LessEq, 1);
    for (int i = 1; i <= m; ++i) {
        SparseRow row;
        for (int k = 1; k <= groups; ++k) row.emplace_back(var(i, k), weights[static_cast<std::size_t>(k - 1)]);
        sys.add_row(std::move(row), RowKind::Equal, alpha[static_cast<std::size_t>(i - 1)]);
    }
    for (int k = 1; k <= groups; ++k) {
        const auto& rs = row_sets[static_cast<std::size_t>(k - 1)];
        for (int s = 1; s <= m; ++s) {
            SparseRow row;
            for (int i = 1; i <= s; ++i) row.emplace_back(var(i, k), -1);
            auto below = std::count_if(rs.begin(), rs.end(), [s](int r) { return r <= s; });
            sys.add_row(std::move(row), RowKind::LessEq, -static_cast<long>(below));
        }
    }
    return sys;
}

}  // namespace

FeasibilitySystem build_P(const Diagram& d, const std::vector<int>& alpha) {
    const int n = d.n();
    std::vector<int> a = checked_alpha(alpha, n);
    if (std::accumulate(a.begin(), a.end(), 0L) != d.size()) {
        throw InputError("build_P: alpha sums to " + std::to_string(std::accumulate(a.begin(), a.end(), 0L)) +
                         " but the diagram has " + std::to_string(d.size()) + " cells");
    }
    std::vector<std::vector<int>> cols;
    for (int j = 1; j <= n; ++j) cols.push_back(d.column_rows(j));
    return build_system(n, std::vector<int>(static_cast<std::size_t>(n), 1), cols, a);
}

FeasibilitySystem build_P_inequality_form(const Diagram& d, const std::vector<int>& alpha) {
    FeasibilitySystem sys = build_P(d, alpha);
    std::replace(sys.kinds.begin(), sys.kinds.end(), RowKind::Equal, RowKind::LessEq);
    return sys;
}

std::optional<LatticePoint> integral_vertex(const FeasibilitySystem& p_system, int n) {
    if (p_system.cols != n * n) throw InputError("integral_vertex: system does not have n^2 variables");
    LpResult res = lp_feasible(p_system);
    if (!res.feasible) return std::nullopt;
    LatticePoint pt;
    pt.n = n;
    for (const Rational& q : res.point) {
        if (q.get_den() != 1 || (q != 0 && q != 1)) {
            throw std::logic_error("integral_vertex: vertex coordinate " + to_string(q) + " is not 0/1");
        }
        pt.coords.push_back(q == 1 ? 1 : 0);
    }
    return pt;
}

CompressionData build_compression_rothe(const Code& code) {
    std::vector<std::int64_t> values = code_prefix_values(code);
    std::sort(values.begin(), values.end());
    if (!values.empty() && values.back() > 1000000) {
        throw BudgetError("build_compression_rothe: column range exceeds 10^6");
    }
    CompressionData c;
    c.m = static_cast<int>(code.size());
    std::int64_t prev = 0;
    for (std::int64_t v : values) {
        if (v > prev + 1) {
            std::vector<int> block(static_cast<std::size_t>(v - prev - 1));
            std::iota(block.begin(), block.end(), static_cast<int>(prev + 1));
            c.blocks.push_back(std::move(block));
        }
        c.blocks.push_back({static_cast<int>(v)});
        prev = v;
    }
    std::vector<std::int64_t> w = code_prefix_values(code);
    for (const auto& block : c.blocks) {
        const int p = block.front();
        c.reps.push_back(p);
        c.sizes.push_back(static_cast<int>(block.size()));
        std::vector<int> rows;
        bool seen = false;  // p in {w(i) : i < r}
        for (int r = 1; r <= c.m; ++r) {
            if (!seen && w[static_cast<std::size_t>(r - 1)] > p) rows.push_back(r);
            if (w[static_cast<std::size_t>(r - 1)] == p) seen = true;
        }
        c.row_sets.push_back(std::move(rows));
    }
    return c;
}

void validate_compression(const Diagram& d, const CompressionData& c) {
    const int n = d.n();
    const std::size_t l = c.blocks.size();
    if (c.m < 0 || c.m > n) throw InputError("compression: m out of range");
    if (c.reps.size() != l || c.sizes.size() != l) throw InputError("compression: block data lengths differ");
    if (!c.row_sets.empty() && c.row_sets.size() != l) throw InputError("compression: row set count differs");
    for (const Cell& cell : d.cells()) {
        if (cell.row > c.m) throw InputError("compression: diagram has a cell below row m");
    }
    std::vector<bool> covered(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t k = 0; k < l; ++k) {
        const auto& block = c.blocks[k];
        if (block.empty()) throw InputError("compression: empty block");
        if (static_cast<int>(block.size()) != c.sizes[k]) throw InputError("compression: size differs from block");
        if (std::find(block.begin(), block.end(), c.reps[k]) == block.end()) {
            throw InputError("compression: representative outside its block");
        }
        const std::vector<int> rows = d.column_rows(c.reps[k]);
        for (int p : block) {
            if (p < 1 || p > n) throw InputError("compression: column out of range");
            if (covered[static_cast<std::size_t>(p)]) throw InputError("compression: blocks overlap");
            covered[static_cast<std::size_t>(p)] = true;
            if (d.column_rows(p) != rows) throw InputError("compression: block columns differ");
        }
        if (!c.row_sets.empty() && c.row_sets[k] != rows) throw InputError("compression: row set differs from diagram");
    }
    for (const Cell& cell : d.cells()) {
        if (!covered[static_cast<std::size_t>(cell.col)]) throw InputError("compression: nonempty column not covered");
    }
}

CompressionData trivial_compression(const Diagram& d) {
    CompressionData c;
    c.m = d.n();
    for (int k = 1; k <= d.n(); ++k) {
        c.blocks.push_back({k});
        c.reps.push_back(k);
        c.sizes.push_back(1);
        c.row_sets.push_back(d.column_rows(k));
    }
    return c;
}

FeasibilitySystem build_Q(const Diagram& d, const CompressionData& c, const std::vector<int>& alpha_tilde) {
    validate_compression(d, c);
    CompressionData filled = c;
    filled.row_sets.clear();
    for (int p : c.reps) filled.row_sets.push_back(d.column_rows(p));
    return build_Q(filled, alpha_tilde);
}

FeasibilitySystem build_Q(const CompressionData& c, const std::vector<int>& alpha_tilde) {
    if (c.row_sets.size() != c.blocks.size() || c.sizes.size() != c.blocks.size()) {
        throw InputError("build_Q: compression lacks row sets");
    }
    if (static_cast<int>(alpha_tilde.size()) != c.m) throw InputError("build_Q: alpha_tilde must have length m");
    for (int a : alpha_tilde) {
        if (a < 0) throw InputError("build_Q: alpha_tilde has a negative entry");
    }
    for (const auto& rs : c.row_sets) {
        for (int r : rs) {
            if (r < 1 || r > c.m) throw InputError("build_Q: row set entry outside [m]");
        }
    }
    return build_system(c.m, c.sizes, c.row_sets, alpha_tilde);
}

namespace {

using IntMatrix = std::vector<std::vector<long long>>;

IntMatrix to_unit_matrix(const std::vector<std::vector<Rational>>& m, bool& ok) {
    ok = true;
    IntMatrix out;
    std::size_t width = m.empty() ? 0 : m.front().size();
    if (static_cast<int>(width) > budgets().tu_columns) {
        throw BudgetError("check_total_unimodularity: " + std::to_string(width) + " columns exceed the limit of " +
                          std::to_string(budgets().tu_columns));
    }
    for (const auto& row : m) {
        if (row.size() != width) throw InputError("check_total_unimodularity: ragged matrix");
        std::vector<long long> r;
        for (const Rational& q : row) {
            if (q != 0 && q != 1 && q != -1) ok = false;
            r.push_back(q == 0 ? 0 : (q > 0 ? 1 : -1));
        }
        out.push_back(std::move(r));
    }
    return out;
}

long long det(IntMatrix a) {
    const std::size_t k = a.size();
    long long sign = 1, prev = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i][i] == 0) {
            std::size_t p = i + 1;
            while (p < k && a[p][i] == 0) ++p;
            if (p == k) return 0;
            std::swap(a[i], a[p]);
            sign = -sign;
        }
        for (std::size_t r = i + 1; r < k; ++r) {
            for (std::size_t c = i + 1; c < k; ++c) a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
        }
        prev = a[i][i];
    }
    return sign * a[k - 1][k - 1];
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool all_minors_unit(const IntMatrix& m) {
    if (m.empty()) return true;
    const std::size_t rows = m.size(), cols = m.front().size();
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::size_t> ri(k);
        std::iota(ri.begin(), ri.end(), 0);
        do {
            std::vector<std::size_t> ci(k);
            std::iota(ci.begin(), ci.end(), 0);
            do {
                IntMatrix sub(k, std::vector<long long>(k));
                for (std::size_t a = 0; a < k; ++a) {
                    for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[ri[a]][ci[b]];
                }
                long long v = det(std::move(sub));
                if (v < -1 || v > 1) return false;
            } while (next_combination(ci, cols));
        } while (next_combination(ri, rows));
    }
    return true;
}

}  // namespace

bool check_total_unimodularity_naive(const std::vector<std::vector<Rational>>& m) {
    bool ok = true;
    IntMatrix a = to_unit_matrix(m, ok);
    return ok && all_minors_unit(a);
}

bool check_total_unimodularity(const std::vector<std::vector<Rational>>& m) {
    bool ok = true;
    IntMatrix a = to_unit_matrix(m, ok);
    if (!ok) return false;
    IntMatrix reduced;
    std::set<std::vector<long long>> seen;
    for (auto& row : a) {
        long nonzero = std::count_if(row.begin(), row.end(), [](long long v) { return v != 0; });
        if (nonzero <= 1) continue;
        std::vector<long long> neg(row.size());
        std::transform(row.begin(), row.end(), neg.begin(), [](long long v) { return -v; });
        if (seen.count(row) || seen.count(neg)) continue;
        seen.insert(row);
        reduced.push_back(std::move(row));
    }
    return all_minors_unit(reduced);
}

std::vector<int> round_by_stable_sequences(const Diagram& d, const std::vector<int>& alpha,
                                           std::vector<Rational> point) {
    const int n = d.n();
    FeasibilitySystem sys = build_P(d, alpha);
    if (!sys.satisfied_by(point)) throw InputError("round_by_stable_sequences: point is not in P(D, alpha)");
    auto idx = [n](int i, int j) { return static_cast<std::size_t>((j - 1) * n + (i - 1)); };
    auto fractional = [&](int i, int j) { return point[idx(i, j)].get_den() != 1; };
    auto integer_count = [&] {
        return std::count_if(point.begin(), point.end(), [](const Rational& q) { return q.get_den() == 1; });
    };

    while (true) {
        const long before = integer_count();
        if (before == static_cast<long>(point.size())) break;
        int r1 = 0, c1 = 0;
        for (int j = 1; j <= n && r1 == 0; ++j) {
            for (int i = 1; i <= n; ++i) {
                if (fractional(i, j)) {
                    r1 = i;
                    c1 = j;
                    break;
                }
            }
        }
        std::vector<int> rs{r1}, cs{c1};
        while (true) {
            const int rk = rs.back(), ck = cs.back();
            int next = 0;
            for (int i = n; i >= 1; --i) {
                if (i != rk && fractional(i, ck)) {
                    next = i;
                    break;
                }
            }
            if (next == 0) throw std::logic_error("round_by_stable_sequences: column sum is not integral");
            auto it = std::find(rs.begin(), rs.end(), next);
            if (it != rs.end()) {
                auto start = it - rs.begin();
                rs.erase(rs.begin(), rs.begin() + start);
                cs.erase(cs.begin(), cs.begin() + start);
                rs.push_back(next);
                break;
            }
            rs.push_back(next);
            int nc = 0;
            for (int j = 1; j <= n; ++j) {
                if (j != ck && fractional(next, j)) {
                    nc = j;
                    break;
                }
            }
            if (nc == 0) throw std::logic_error("round_by_stable_sequences: row sum is not integral");
            cs.push_back(nc);
        }

        std::vector<Rational> dir(point.size());
        for (std::size_t k = 0; k < cs.size(); ++k) {
            dir[idx(rs[k], cs[k])] += 1;
            dir[idx(rs[k + 1], cs[k])] -= 1;
        }
        bool bounded = false;
        Rational eta;
        for (std::size_t r = 0; r < sys.rows.size(); ++r) {
            Rational slope = 0, lhs = 0;
            for (const auto& [c, v] : sys.rows[r]) {
                slope += v * dir[static_cast<std::size_t>(c)];
                lhs += v * point[static_cast<std::size_t>(c)];
            }
            if (sys.kinds[r] == RowKind::Equal) {
                if (slope != 0) throw std::logic_error("round_by_stable_sequences: perturbation breaks an equality");
                continue;
            }
            if (slope > 0) {
                Rational step = (sys.rhs[r] - lhs) / slope;
                if (!bounded || step < eta) eta = step;
                bounded = true;
            }
        }
        if (!bounded || eta <= 0) throw std::logic_error("round_by_stable_sequences: no admissible step");
        for (std::size_t v = 0; v < point.size(); ++v) point[v] += eta * dir[v];
        if (integer_count() <= before) throw std::logic_error("round_by_stable_sequences: no progress");
    }
    std::vector<int> out;
    for (const Rational& q : point) out.push_back(static_cast<int>(q.get_num().get_si()));
    return out;
}

}  // namespace schub
