#include "schub/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schub {

Tableau::Tableau(Diagram shape) : shape_(std::move(shape)) {
    for (const Cell& c : shape_.cells()) labels_[c] = kUnlabeled;
}

Tableau::Tableau(Diagram shape, std::map<Cell, int> labels) : shape_(std::move(shape)), labels_(std::move(labels)) {
    if (labels_.size() != shape_.cells().size())
        throw InputError("tableau labels must cover exactly the cells of its shape");
    for (const auto& [cell, label] : labels_) {
        if (!shape_.contains(cell.row, cell.col)) throw InputError("label outside the tableau shape");
        if (label < 0 || label > shape_.n()) throw InputError("label out of range [n]");
    }
}

int Tableau::at(Cell c) const {
    auto it = labels_.find(c);
    if (it == labels_.end()) throw InputError("cell is not in the tableau shape");
    return it->second;
}

void Tableau::set(Cell c, int label) {
    if (!shape_.contains(c.row, c.col)) throw InputError("cell is not in the tableau shape");
    if (label < 0 || label > shape_.n()) throw InputError("label out of range [n]");
    labels_[c] = label;
}

SubsetS SubsetS::of(std::initializer_list<int> rows) {
    SubsetS s;
    for (int r : rows) {
        if (r < 1 || r > 32) throw InputError("subset member out of range");
        s.bits |= 1u << (r - 1);
    }
    return s;
}

bool is_flagged(const Tableau& t) {
    for (const auto& [cell, label] : t.labels())
        if (label != kUnlabeled && label > cell.row) return false;
    return true;
}

bool is_column_injective(const Tableau& t) {
    std::set<std::pair<int, int>> seen;  // (col, label)
    for (const auto& [cell, label] : t.labels()) {
        if (label == kUnlabeled) continue;
        if (!seen.insert({cell.col, label}).second) return false;
    }
    return true;
}

bool is_perfect(const Tableau& t) {
    for (const auto& [cell, label] : t.labels())
        if (label == kUnlabeled) return false;
    return is_flagged(t) && is_column_injective(t);
}

bool is_column_strict(const Tableau& t) {
    std::map<int, int> last;  // col -> label of the lowest labelled cell seen so far
    // labels() iterates row-major, so each column is visited top to bottom.
    for (const auto& [cell, label] : t.labels()) {
        if (label == kUnlabeled) continue;
        auto it = last.find(cell.col);
        if (it != last.end() && it->second >= label) return false;
        last[cell.col] = label;
    }
    return true;
}

std::vector<int> content(const Tableau& t) {
    std::vector<int> counts(t.shape().n(), 0);
    for (const auto& [cell, label] : t.labels())
        if (label != kUnlabeled) ++counts[label - 1];
    return counts;
}

int count_in(const Tableau& t, SubsetS s) {
    int count = 0;
    for (const auto& [cell, label] : t.labels())
        if (label != kUnlabeled && s.contains(label)) ++count;
    return count;
}

bool exhausts(const Tableau& t, const std::vector<int>& alpha, SubsetS s) {
    long long need = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (s.contains(static_cast<int>(i) + 1)) need += alpha[i];
    return need <= count_in(t, s);
}

namespace {

enum class Mode { FCI, Perfect, ColumnStrict };

struct Enumerator {
    Mode mode;
    int n = 0;
    std::vector<Cell> cells;  // (col,row) order
    std::optional<std::vector<int>> alpha;
    std::vector<int> counts;
    long long deficit = 0;  // sum over i of alpha_i - counts_i
    std::vector<int> labels;
    std::vector<std::uint64_t> used;  // per column bitmask of labels
    Diagram shape;
    std::vector<Tableau> out;

    void run(std::size_t k) {
        if (alpha && deficit > static_cast<long long>(cells.size() - k)) return;
        if (k == cells.size()) {
            if (alpha && deficit != 0) return;
            std::map<Cell, int> lab;
            for (std::size_t i = 0; i < cells.size(); ++i) lab[cells[i]] = labels[i];
            out.emplace_back(shape, std::move(lab));
            return;
        }
        const Cell c = cells[k];
        int lo = 1;
        if (mode == Mode::ColumnStrict && k > 0 && cells[k - 1].col == c.col) lo = labels[k - 1] + 1;
        const int hi = std::min(c.row, n);
        for (int v = lo; v <= hi; ++v) {
            if ((used[c.col] >> v) & 1u) continue;
            if (alpha && counts[v - 1] >= (*alpha)[v - 1]) continue;
            used[c.col] |= std::uint64_t{1} << v;
            ++counts[v - 1];
            --deficit;
            labels[k] = v;
            run(k + 1);
            ++deficit;
            --counts[v - 1];
            used[c.col] &= ~(std::uint64_t{1} << v);
        }
        if (mode == Mode::FCI) {
            labels[k] = kUnlabeled;
            run(k + 1);
        }
    }
};

std::vector<Tableau> enumerate(const Diagram& d, const std::optional<std::vector<int>>& alpha, Mode mode) {
    if (d.size() > budgets().enumeration_cells)
        throw BudgetError("tableau enumeration budget exceeded: " + std::to_string(d.size()) + " cells > " +
                          std::to_string(budgets().enumeration_cells));
    if (d.n() > 63) throw BudgetError("tableau enumeration supports n <= 63");
    Enumerator e;
    e.mode = mode;
    e.n = d.n();
    e.shape = d;
    e.cells.assign(d.cells().begin(), d.cells().end());
    std::sort(e.cells.begin(), e.cells.end(), [](const Cell& a, const Cell& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    e.labels.assign(e.cells.size(), kUnlabeled);
    e.used.assign(d.n() + 2, 0);
    e.counts.assign(d.n(), 0);
    if (alpha) {
        std::vector<int> a = *alpha;
        for (std::size_t i = d.n(); i < a.size(); ++i)
            if (a[i] != 0) return {};  // labels never exceed n
        a.resize(d.n(), 0);
        for (int v : a) {
            if (v < 0) return {};
            e.deficit += v;
        }
        e.alpha = a;
        if (mode != Mode::FCI && e.deficit != d.size()) return {};
    }
    e.run(0);
    return std::move(e.out);
}

}  // namespace

std::vector<Tableau> enumerate_fcitab(const Diagram& d, const std::optional<std::vector<int>>& alpha) {
    return enumerate(d, alpha, Mode::FCI);
}

std::vector<Tableau> enumerate_perfect(const Diagram& d, const std::optional<std::vector<int>>& alpha) {
    return enumerate(d, alpha, Mode::Perfect);
}

std::vector<Tableau> enumerate_column_strict(const Diagram& d, const std::optional<std::vector<int>>& alpha) {
    return enumerate(d, alpha, Mode::ColumnStrict);
}

std::vector<int> tableau_to_point(const Tableau& t) {
    if (!is_column_injective(t)) throw InputError("tableau is not column-injective");
    const int n = t.shape().n();
    std::vector<int> x(static_cast<std::size_t>(n) * n, 0);
    for (const auto& [cell, label] : t.labels())
        if (label != kUnlabeled) x[static_cast<std::size_t>(cell.col - 1) * n + (label - 1)] = 1;
    return x;
}

Tableau tableau_from_integral_point(const Diagram& d, const std::vector<int>& point) {
    const int n = d.n();
    if (point.size() != static_cast<std::size_t>(n) * n) throw InputError("point must have n^2 coordinates");
    for (int v : point)
        if (v != 0 && v != 1) throw InputError("point is not a 0/1 lattice point");
    Tableau t(d);
    for (int j = 1; j <= n; ++j) {
        std::vector<int> rows = d.column_rows(j);
        std::vector<int> labels;
        for (int i = 1; i <= n; ++i)
            if (point[static_cast<std::size_t>(j - 1) * n + (i - 1)]) labels.push_back(i);
        if (labels.size() != rows.size())
            throw InputError("point violates the column count in column " + std::to_string(j));
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (labels[k] > rows[k])
                throw InputError("point violates the flag condition in column " + std::to_string(j));
            t.set({rows[k], j}, labels[k]);
        }
    }
    return t;
}

namespace {

void check_shape_flag(const Partition& lambda, const std::vector<int>& phi) {
    if (lambda.size() != phi.size()) throw InputError("flag length must equal the number of parts");
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] <= 0 || (i && lambda[i] > lambda[i - 1])) throw InputError("not a partition with positive parts");
        if (phi[i] < 1) throw InputError("flag entries must be positive");
    }
    int size = std::accumulate(lambda.begin(), lambda.end(), 0);
    if (size > budgets().partition_size)
        throw BudgetError("partition size " + std::to_string(size) + " exceeds budget " +
                          std::to_string(budgets().partition_size));
}

struct SsytWalker {
    const Partition& lambda;
    const std::vector<int>& phi;
    const std::vector<int>* content = nullptr;
    std::vector<int> counts;
    long long remaining_need = 0;
    int cells_left = 0;
    std::vector<std::vector<int>> rows;
    std::vector<FlaggedSSYT>* out = nullptr;
    std::int64_t count = 0;

    void run(std::size_t i, std::size_t j) {
        if (i == lambda.size()) {
            if (content && remaining_need != 0) return;
            ++count;
            if (out) out->push_back({lambda, rows, phi});
            return;
        }
        if (j == static_cast<std::size_t>(lambda[i])) {
            run(i + 1, 0);
            return;
        }
        int lo = 1;
        if (j > 0) lo = rows[i][j - 1];
        if (i > 0) lo = std::max(lo, rows[i - 1][j] + 1);
        for (int v = lo; v <= phi[i]; ++v) {
            if (content) {
                if (v > static_cast<int>(content->size()) || counts[v - 1] >= (*content)[v - 1]) continue;
            }
            rows[i][j] = v;
            if (content) {
                ++counts[v - 1];
                --remaining_need;
            }
            run(i, j + 1);
            if (content) {
                --counts[v - 1];
                ++remaining_need;
            }
        }
    }
};

}  // namespace

std::vector<FlaggedSSYT> enumerate_flagged_ssyt(const Partition& lambda, const std::vector<int>& phi,
                                                const std::optional<std::vector<int>>& content) {
    check_shape_flag(lambda, phi);
    std::vector<FlaggedSSYT> out;
    SsytWalker walk{lambda, phi};
    if (content) {
        walk.content = &*content;
        walk.counts.assign(content->size(), 0);
        for (int v : *content) {
            if (v < 0) return out;
            walk.remaining_need += v;
        }
        if (walk.remaining_need != std::accumulate(lambda.begin(), lambda.end(), 0LL)) return out;
    }
    for (int part : lambda) walk.rows.emplace_back(part, 0);
    walk.out = &out;
    walk.run(0, 0);
    return out;
}

std::int64_t count_flagged_ssyt(const Partition& lambda, const std::vector<int>& phi, const std::vector<int>& content) {
    check_shape_flag(lambda, phi);
    SsytWalker walk{lambda, phi};
    walk.content = &content;
    walk.counts.assign(content.size(), 0);
    for (int v : content) {
        if (v < 0) return 0;
        walk.remaining_need += v;
    }
    if (walk.remaining_need != std::accumulate(lambda.begin(), lambda.end(), 0LL)) return 0;
    for (int part : lambda) walk.rows.emplace_back(part, 0);
    walk.run(0, 0);
    return walk.count;
}

std::vector<int> ssyt_content(const FlaggedSSYT& t, int length) {
    std::vector<int> c(length, 0);
    for (const auto& row : t.rows)
        for (int v : row) {
            if (v > length) c.resize(v, 0);
            ++c[v - 1];
        }
    return c;
}

RowCountMatrix row_count_matrix(const std::vector<std::vector<int>>& rows, int side) {
    if (static_cast<int>(rows.size()) > side) throw InputError("more rows than the matrix side");
    RowCountMatrix r(side, std::vector<int>(side, 0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int v : rows[i]) {
            if (v < 1 || v > side) throw InputError("entry outside [side]");
            ++r[i][v - 1];
        }
    return r;
}

bool validate_row_count_matrix(const RowCountMatrix& r, const Partition& lambda, const std::vector<int>& phi) {
    const std::size_t side = r.size();
    for (const auto& row : r) {
        if (row.size() != side) return false;
        for (int v : row)
            if (v < 0) return false;
    }
    for (std::size_t i = side; i < lambda.size(); ++i)
        if (lambda[i] != 0) return false;
    for (std::size_t i = 0; i < side; ++i) {
        const int flag = i < phi.size() ? phi[i] : 0;
        const int part = i < lambda.size() ? lambda[i] : 0;
        long long sum = 0;
        for (std::size_t j = 0; j < side; ++j) {
            if (static_cast<int>(j) + 1 > flag && r[i][j] != 0) return false;
            sum += r[i][j];
        }
        if (sum != part) return false;
    }
    for (std::size_t i = 0; i + 1 < side; ++i) {
        long long below = 0;  // entries <= j+1 in row i+2
        long long above = 0;  // entries < j+1 in row i+1
        for (std::size_t j = 0; j < side; ++j) {
            below += r[i + 1][j];
            if (below > above) return false;
            above += r[i][j];
        }
    }
    return true;
}

std::vector<std::vector<int>> decode_row_count_matrix(const RowCountMatrix& r) {
    std::vector<std::vector<int>> rows;
    for (const auto& counts : r) {
        std::vector<int> row;
        for (std::size_t j = 0; j < counts.size(); ++j)
            row.insert(row.end(), counts[j], static_cast<int>(j) + 1);
        rows.push_back(std::move(row));
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    return rows;
}

std::string render_tableau(const Tableau& t) {
    const int n = t.shape().n();
    std::ostringstream out;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (j > 1) out << ' ';
            if (!t.shape().contains(i, j)) {
                out << '.';
                continue;
            }
            int label = t.at({i, j});
            if (label == kUnlabeled)
                out << "∘";
            else
                out << label;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace schub
