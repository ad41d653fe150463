#include "schub/schubert.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "schub/lp.hpp"

namespace schub {

Exponent trim_exponent(Exponent e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
}

MultiPoly MultiPoly::constant(std::int64_t c) {
    MultiPoly p;
    p.add_term({}, c);
    return p;
}

MultiPoly MultiPoly::monomial(Exponent e, std::int64_t c) {
    MultiPoly p;
    p.add_term(std::move(e), c);
    return p;
}

MultiPoly MultiPoly::variable(int i) {
    Exponent e(static_cast<std::size_t>(i), 0);
    e.back() = 1;
    return monomial(std::move(e));
}

std::int64_t MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(trim_exponent(e));
    return it == terms_.end() ? 0 : it->second;
}

int MultiPoly::num_vars() const {
    std::size_t n = 0;
    for (const auto& [e, c] : terms_) n = std::max(n, e.size());
    return static_cast<int>(n);
}

std::int64_t MultiPoly::coefficient_sum() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

void MultiPoly::add_term(Exponent e, std::int64_t c) {
    if (c == 0) return;
    for (int v : e)
        if (v < 0) throw InputError("negative exponent");
    e = trim_exponent(std::move(e));
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    return r += o;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    return r -= o;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : o.terms_) {
            Exponent e(std::max(a.size(), b.size()), 0);
            for (std::size_t i = 0; i < a.size(); ++i) e[i] += a[i];
            for (std::size_t i = 0; i < b.size(); ++i) e[i] += b[i];
            r.add_term(std::move(e), ca * cb);
        }
    }
    return r;
}

std::string MultiPoly::serialize(int n) const {
    if (n < 0) n = num_vars();
    std::ostringstream out;
    for (const auto& [e, c] : terms_) {
        out << c;
        if (n > 0 || !e.empty()) out << ' ';
        const std::size_t width = std::max(static_cast<std::size_t>(n), e.size());
        for (std::size_t i = 0; i < width; ++i) out << (i ? "," : "") << (i < e.size() ? e[i] : 0);
        out << '\n';
    }
    return out.str();
}

MultiPoly swap_variables(const MultiPoly& f, int i) {
    MultiPoly r;
    for (const auto& [exp, c] : f.terms()) {
        Exponent e = exp;
        if (e.size() < static_cast<std::size_t>(i + 1)) e.resize(static_cast<std::size_t>(i + 1), 0);
        std::swap(e[static_cast<std::size_t>(i - 1)], e[static_cast<std::size_t>(i)]);
        r.add_term(std::move(e), c);
    }
    return r;
}

MultiPoly divided_difference(const MultiPoly& f, int i) {
    if (i < 1) throw InputError("divided difference index must be positive");
    const auto xi = static_cast<std::size_t>(i - 1);
    auto degree = [xi](const Exponent& e) { return xi < e.size() ? e[xi] : 0; };

    // Terms keyed by (degree in x_i, exponent), largest first.
    using Key = std::pair<int, Exponent>;
    std::map<Key, std::int64_t, std::greater<Key>> rest;
    auto add = [&](Exponent e, std::int64_t c) {
        e = trim_exponent(std::move(e));
        Key k{degree(e), std::move(e)};
        auto [it, inserted] = rest.try_emplace(std::move(k), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) rest.erase(it);
        }
    };
    const MultiPoly antisym = f - swap_variables(f, i);
    for (const auto& [e, c] : antisym.terms()) add(e, c);

    MultiPoly quotient;
    while (!rest.empty()) {
        auto it = rest.begin();
        const int d = it->first.first;
        if (d == 0) throw std::logic_error("divided difference left a nonzero remainder");
        Exponent e = it->first.second;
        const std::int64_t c = it->second;
        rest.erase(it);
        if (e.size() < xi + 2) e.resize(xi + 2, 0);
        e[xi] -= 1;
        quotient.add_term(e, c);
        e[xi + 1] += 1;
        add(e, c);
    }
    return quotient;
}

namespace {

std::atomic<std::uint64_t> g_oracle_calls{0};

std::vector<int> padded_alpha(const std::vector<int>& alpha, std::size_t length, bool& fits) {
    fits = true;
    std::vector<int> a(length, 0);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0) throw InputError("alpha has a negative entry");
        if (i < length) {
            a[i] = alpha[i];
        } else if (alpha[i] != 0) {
            fits = false;
        }
    }
    return a;
}

}  // namespace

std::uint64_t oracle_invocations() { return g_oracle_calls.load(); }

MultiPoly schubert_divided_diff(const Permutation& w, int n) {
    if (n > budgets().oracle_n) {
        throw BudgetError("divided-difference oracle limited to n <= " + std::to_string(budgets().oracle_n));
    }
    if (w.size() > n) throw InputError(w.str() + " is not in S_" + std::to_string(n));
    ++g_oracle_calls;
    if (n <= 1) return MultiPoly::constant(1);

    std::vector<int> u(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) u[static_cast<std::size_t>(i - 1)] = w(i);
    std::vector<int> path;
    while (true) {
        int i = 1;
        while (i < n && u[static_cast<std::size_t>(i - 1)] > u[static_cast<std::size_t>(i)]) ++i;
        if (i == n) break;
        path.push_back(i);
        std::swap(u[static_cast<std::size_t>(i - 1)], u[static_cast<std::size_t>(i)]);
    }
    Exponent top(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n - 1; ++i) top[static_cast<std::size_t>(i)] = n - 1 - i;
    MultiPoly f = MultiPoly::monomial(top);
    for (auto it = path.rbegin(); it != path.rend(); ++it) f = divided_difference(f, *it);
    return f;
}

MultiPoly schubert_divided_diff(const Permutation& w) { return schubert_divided_diff(w, std::max(w.size(), 1)); }

std::int64_t coefficient_oracle(const Permutation& w, const std::vector<int>& alpha) {
    for (int a : alpha)
        if (a < 0) throw InputError("alpha has a negative entry");
    return schubert_divided_diff(w).coefficient(alpha);
}

std::int64_t principal_specialization(const Permutation& w) { return schubert_divided_diff(w).coefficient_sum(); }

bool nonvanishing(const Code& code, const std::vector<int>& alpha) {
    const std::size_t L = code.size();
    code_prefix_values(code);
    if (alpha.size() < L) throw InputError("alpha must have at least " + std::to_string(L) + " entries");
    bool fits = true;
    std::vector<int> a = padded_alpha(alpha, L, fits);
    if (!fits) return false;
    if (std::accumulate(a.begin(), a.end(), 0L) != std::accumulate(code.begin(), code.end(), 0L)) return false;
    if (L == 0) return true;
    CompressionData c = build_compression_rothe(code);
    return lp_feasible(build_Q(c, a)).feasible;
}

std::optional<Tableau> tableau_witness(const Code& code, const std::vector<int>& alpha) {
    if (!nonvanishing(code, alpha)) return std::nullopt;
    Permutation w = code_to_permutation(code);
    Diagram d = rothe_diagram(w);
    bool fits = true;
    std::vector<int> a = padded_alpha(alpha, static_cast<std::size_t>(d.n()), fits);
    std::optional<LatticePoint> pt = integral_vertex(build_P(d, a), d.n());
    if (!pt) throw std::logic_error("tableau_witness: compressed and full systems disagree");
    Tableau t = tableau_from_integral_point(d, pt->coords);

    // Sorting labels down each column keeps the flag condition and the content.
    for (int col = 1; col <= d.n(); ++col) {
        std::vector<int> rows = d.column_rows(col);
        std::vector<int> labels;
        for (int r : rows) labels.push_back(t.at({r, col}));
        std::sort(labels.begin(), labels.end());
        for (std::size_t k = 0; k < rows.size(); ++k) t.set({rows[k], col}, labels[k]);
    }
    return t;
}

TransitionChildren transition_children(const Code& code) {
    if (is_vexillary(code)) throw InputError("code " + format_vector(code) + " is vexillary (a leaf)");
    std::optional<Cell> z = accessible_box(code);
    if (!z) throw std::logic_error("non-vexillary code without an accessible box");
    const std::vector<std::int64_t> w = code_prefix_values(code);
    const int r = z->row;
    auto trim = [](Code c) {
        while (!c.empty() && c.back() == 0) c.pop_back();
        return c;
    };

    TransitionChildren out;
    out.z = *z;
    out.deletion = code;
    out.deletion[static_cast<std::size_t>(r - 1)] -= 1;
    out.deletion = trim(std::move(out.deletion));

    for (const Cell& dot : pivot_dots(w, *z)) {
        const int i = dot.row;
        const std::int64_t wi = w[static_cast<std::size_t>(i - 1)];
        std::int64_t below = 0;
        for (int h = 1; h < r; ++h)
            if (w[static_cast<std::size_t>(h - 1)] < wi) ++below;
        const int b = code[static_cast<std::size_t>(r - 1)] - static_cast<int>((wi - 1) - below);
        if (b <= 0) throw std::logic_error("march move with non-positive shift");
        Code child = code;
        child[static_cast<std::size_t>(i - 1)] += b;
        child[static_cast<std::size_t>(r - 1)] -= b;
        out.marches.emplace_back(i, trim(std::move(child)));
    }
    return out;
}

namespace {

class NodeBudget {
public:
    void visit() {
        if (++nodes_ > budgets().tree_nodes) {
            throw BudgetError("transition tree exceeds " + std::to_string(budgets().tree_nodes) + " nodes");
        }
    }

private:
    std::int64_t nodes_ = 0;
};

// Visits every root-to-leaf path; on_leaf receives the leaf code and the path.
void walk_tree(const Code& code, TransitionString& path, Exponent& weight, NodeBudget& budget,
               const std::function<bool(const Exponent&)>& keep,
               const std::function<void(const Code&, const TransitionString&, const Exponent&)>& on_leaf) {
    budget.visit();
    if (!keep(weight)) return;
    if (is_vexillary(code)) {
        on_leaf(code, path, weight);
        return;
    }
    TransitionChildren kids = transition_children(code);
    const int r = kids.z.row;

    const bool merge = !path.empty() && path.back().kind == TransitionStep::Kind::Delete && path.back().row == r;
    if (merge) {
        ++path.back().multiplicity;
    } else {
        path.push_back({TransitionStep::Kind::Delete, r, 1});
    }
    ++weight[static_cast<std::size_t>(r - 1)];
    walk_tree(kids.deletion, path, weight, budget, keep, on_leaf);
    --weight[static_cast<std::size_t>(r - 1)];
    if (merge) {
        --path.back().multiplicity;
    } else {
        path.pop_back();
    }

    for (const auto& [i, child] : kids.marches) {
        path.push_back({TransitionStep::Kind::March, i, 1});
        walk_tree(child, path, weight, budget, keep, on_leaf);
        path.pop_back();
    }
}

}  // namespace

std::vector<TransitionTerm> transition_expand(const Code& code) {
    code_prefix_values(code);
    std::vector<TransitionTerm> out;
    TransitionString path;
    Exponent weight(code.size(), 0);
    NodeBudget budget;
    walk_tree(code, path, weight, budget, [](const Exponent&) { return true; },
              [&](const Code& leaf, const TransitionString&, const Exponent& wt) { out.push_back({wt, leaf}); });
    return out;
}

MultiPoly complete_homogeneous(int k, int vars) {
    if (k < 0) return {};
    if (k == 0) return MultiPoly::constant(1);
    if (vars <= 0) return {};
    MultiPoly out;
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    std::function<void(int, int)> fill = [&](int var, int left) {
        if (var == vars - 1) {
            e[static_cast<std::size_t>(var)] = left;
            out.add_term(e, 1);
            return;
        }
        for (int d = left; d >= 0; --d) {
            e[static_cast<std::size_t>(var)] = d;
            fill(var + 1, left - d);
        }
    };
    fill(0, k);
    return out;
}

MultiPoly flagged_schur(const Partition& lambda, const std::vector<int>& phi) {
    if (lambda.size() != phi.size()) throw InputError("flag length must equal the number of parts");
    for (std::size_t i = 1; i < phi.size(); ++i)
        if (phi[i] < phi[i - 1]) throw InputError("flag must be weakly increasing");
    if (lambda.empty()) return MultiPoly::constant(1);

    const std::size_t m = lambda.size();
    std::vector<MultiPoly> by_sum;  // determinant over the first popcount(mask) rows, columns in mask
    by_sum.assign(std::size_t{1} << m, MultiPoly{});
    by_sum[0] = MultiPoly::constant(1);
    for (std::size_t mask = 0; mask < by_sum.size(); ++mask) {
        if (by_sum[mask].is_zero()) continue;
        const auto row = static_cast<std::size_t>(std::popcount(mask));
        if (row == m) continue;
        for (std::size_t col = 0; col < m; ++col) {
            if (mask & (std::size_t{1} << col)) continue;
            const int k = lambda[row] - static_cast<int>(row) + static_cast<int>(col);
            MultiPoly h = complete_homogeneous(k, phi[row]);
            if (h.is_zero()) continue;
            const int above = std::popcount(mask >> (col + 1));
            MultiPoly term = by_sum[mask] * h;
            if (above % 2) {
                by_sum[mask | (std::size_t{1} << col)] -= term;
            } else {
                by_sum[mask | (std::size_t{1} << col)] += term;
            }
        }
    }
    MultiPoly jacobi_trudi = by_sum.back();

    MultiPoly tableau_sum;
    for (const FlaggedSSYT& t : enumerate_flagged_ssyt(lambda, phi)) {
        tableau_sum.add_term(ssyt_content(t, phi.back()), 1);
    }
    if (!(jacobi_trudi == tableau_sum)) {
        throw std::logic_error("flagged Schur determinant and tableau sum disagree");
    }
    return jacobi_trudi;
}

std::int64_t count_coefficient_transition(const Code& code, const std::vector<int>& alpha) {
    code_prefix_values(code);
    const std::size_t L = code.size();
    bool fits = true;
    std::vector<int> a = padded_alpha(alpha, L, fits);
    if (!fits) return 0;
    if (std::accumulate(a.begin(), a.end(), 0L) != std::accumulate(code.begin(), code.end(), 0L)) return 0;

    std::int64_t total = 0;
    TransitionString path;
    Exponent weight(L, 0);
    NodeBudget budget;
    auto keep = [&](const Exponent& wt) {
        for (std::size_t i = 0; i < L; ++i)
            if (wt[i] > a[i]) return false;
        return true;
    };
    walk_tree(code, path, weight, budget, keep, [&](const Code& leaf, const TransitionString&, const Exponent& wt) {
        std::vector<int> rest(L);
        for (std::size_t i = 0; i < L; ++i) rest[i] = a[i] - wt[i];
        ShapeFlag sf = shape_and_flag(leaf);
        if (sf.lambda.empty()) {
            total += std::all_of(rest.begin(), rest.end(), [](int v) { return v == 0; }) ? 1 : 0;
        } else {
            total += count_flagged_ssyt(sf.lambda, sf.phi, rest);
        }
    });
    return total;
}

std::vector<WitnessPair> enumerate_witnesses(const Code& code, const std::vector<int>& alpha) {
    code_prefix_values(code);
    const std::size_t L = code.size();
    bool fits = true;
    std::vector<int> a = padded_alpha(alpha, L, fits);
    std::vector<WitnessPair> out;
    if (!fits) return out;

    TransitionString path;
    Exponent weight(L, 0);
    NodeBudget budget;
    auto keep = [&](const Exponent& wt) {
        for (std::size_t i = 0; i < L; ++i)
            if (wt[i] > a[i]) return false;
        return true;
    };
    walk_tree(code, path, weight, budget, keep, [&](const Code& leaf, const TransitionString& s, const Exponent& wt) {
        std::vector<int> rest(L);
        for (std::size_t i = 0; i < L; ++i) rest[i] = a[i] - wt[i];
        ShapeFlag sf = shape_and_flag(leaf);
        if (sf.lambda.empty()) {
            if (std::all_of(rest.begin(), rest.end(), [](int v) { return v == 0; })) {
                out.push_back({s, RowCountMatrix(L, std::vector<int>(L, 0))});
            }
            return;
        }
        for (const FlaggedSSYT& t : enumerate_flagged_ssyt(sf.lambda, sf.phi, rest)) {
            out.push_back({s, row_count_matrix(t.rows, static_cast<int>(L))});
        }
    });
    return out;
}

bool verify_witness(const WitnessPair& pair, const Code& code, const std::vector<int>& alpha) {
    code_prefix_values(code);
    const std::size_t L = code.size();
    if (pair.steps.size() > L * L) return false;

    Code u = code;
    Exponent weight(L, 0);
    for (std::size_t t = 0; t < pair.steps.size(); ++t) {
        const TransitionStep& s = pair.steps[t];
        if (is_vexillary(u)) return false;
        if (s.kind == TransitionStep::Kind::Delete) {
            if (t > 0 && pair.steps[t - 1].kind == TransitionStep::Kind::Delete && pair.steps[t - 1].row == s.row) {
                return false;
            }
            if (s.multiplicity < 1 || s.row < 1 || static_cast<std::size_t>(s.row) > L) return false;
            const Cell z = *accessible_box(u);
            if (z.row != s.row) return false;
            const std::vector<std::int64_t> w = code_prefix_values(u);
            const std::int64_t dominant = *std::min_element(w.begin(), w.begin() + z.row) - 1;
            if (u[static_cast<std::size_t>(z.row - 1)] - dominant < s.multiplicity) return false;
            for (int k = 0; k < s.multiplicity; ++k) {
                if (is_vexillary(u) || accessible_box(u)->row != s.row) return false;
                u = transition_children(u).deletion;
            }
            weight[static_cast<std::size_t>(s.row - 1)] += s.multiplicity;
        } else {
            TransitionChildren kids = transition_children(u);
            auto it = std::find_if(kids.marches.begin(), kids.marches.end(),
                                   [&](const auto& m) { return m.first == s.row; });
            if (it == kids.marches.end()) return false;
            u = it->second;
        }
    }
    if (!is_vexillary(u)) return false;

    bool fits = true;
    std::vector<int> a = padded_alpha(alpha, L, fits);
    if (!fits) return false;
    if (pair.r.size() != L) return false;
    ShapeFlag sf = shape_and_flag(u);
    if (!validate_row_count_matrix(pair.r, sf.lambda, sf.phi)) return false;
    for (std::size_t j = 0; j < L; ++j) {
        long long col = 0;
        for (std::size_t i = 0; i < L; ++i) col += pair.r[i][j];
        if (weight[j] + col != a[j]) return false;
    }
    return true;
}

std::string format_transition_string(const TransitionString& s) {
    std::ostringstream out;
    out << '(';
    for (std::size_t t = 0; t < s.size(); ++t) {
        if (t) out << ',';
        if (s[t].kind == TransitionStep::Kind::March) {
            out << s[t].row;
        } else {
            out << "(x" << s[t].row << ',' << s[t].multiplicity << ')';
        }
    }
    out << ')';
    return out.str();
}

std::int64_t kostka(const Partition& lambda, const std::vector<int>& alpha) {
    Partition parts;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0 || (i && lambda[i] > lambda[i - 1])) throw InputError("not a partition: " + format_vector(lambda));
        if (lambda[i] > 0) parts.push_back(lambda[i]);
    }
    for (int a : alpha)
        if (a < 0) throw InputError("alpha has a negative entry");
    if (parts.empty()) return std::all_of(alpha.begin(), alpha.end(), [](int v) { return v == 0; }) ? 1 : 0;
    if (alpha.empty()) return 0;
    return count_flagged_ssyt(parts, std::vector<int>(parts.size(), static_cast<int>(alpha.size())), alpha);
}

}  // namespace schub
