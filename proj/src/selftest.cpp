#include "schub/selftest.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "schub/lp.hpp"
#include "schub/oracles.hpp"
#include "schub/schubert.hpp"
#include "schub/schubitope.hpp"

namespace schub {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

class Tally {
public:
    template <class Describe>
    void check(bool ok, Describe&& describe) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (notes_.size() < 3) notes_.push_back(describe());
    }

    void fail(const std::string& what) {
        ++checks_;
        ++failures_;
        if (notes_.size() < 3) notes_.push_back(what);
    }

    bool passed() const { return failures_ == 0 && checks_ > 0; }

    std::string summary(const std::string& extra = "") const {
        std::ostringstream out;
        out << checks_ << " checks, " << failures_ << " failures";
        if (!extra.empty()) out << "; " << extra;
        for (const auto& n : notes_) out << "; " << n;
        return out.str();
    }

private:
    long checks_ = 0;
    long failures_ = 0;
    std::vector<std::string> notes_;
};

int sweep_n(Scope s) { return s == Scope::Quick ? 4 : 5; }

std::string describe(const Permutation& w, const std::vector<int>& alpha) {
    return "w=" + w.str() + " alpha=" + format_vector(alpha);
}

// Visits every w in S_n and every alpha in Z_{>=0}^L with |alpha| = l(w).
template <class Fn>
void for_each_instance(int n, Fn&& fn) {
    for (const Permutation& w : all_permutations(n)) {
        const Code code = permutation_to_code(w);
        const Diagram d = rothe_diagram(w);
        for (const auto& alpha : oracle::compositions(code_degree(code), static_cast<int>(code.size()))) {
            fn(w, code, d, alpha);
        }
    }
}

template <class Fn>
void timed_fact(Tally& t, const std::string& name, Fn&& fn) {
    auto t0 = Clock::now();
    bool ok = false;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        t.fail(name + " threw: " + e.what());
        return;
    }
    double s = seconds_since(t0);
    t.check(ok, [&] { return name + " mismatch"; });
    t.check(s < 1.0, [&] { return name + " took " + std::to_string(s) + " s"; });
}

CriterionResult golden_facts() {
    Tally t;
    const Permutation w = parse_permutation("53841267");
    const Code code = permutation_to_code(w);
    const Diagram d = rothe_diagram(w);

    timed_fact(t, "code", [&] { return code == Code{4, 2, 5, 2}; });
    timed_fact(t, "essential set", [&] {
        return essential_set(d) == std::set<Cell>{{1, 4}, {3, 4}, {3, 7}, {4, 2}};
    });
    timed_fact(t, "accessible box", [&] { return accessible_box(code) == Cell{3, 7}; });
    timed_fact(t, "pivots", [&] {
        auto piv = pivots(w, Cell{3, 7});
        return std::set<Cell>(piv.begin(), piv.end()) == std::set<Cell>{{2, 3}, {1, 5}};
    });
    timed_fact(t, "dominant shape", [&] {
        std::vector<int> rows = dominant_component(d).row_counts();
        while (!rows.empty() && rows.back() == 0) rows.pop_back();
        return rows == std::vector<int>{4, 2, 2, 2};
    });
    timed_fact(t, "vexillary data", [&] {
        ShapeFlag sf = shape_and_flag(permutation_to_code(parse_permutation("6253714")));
        return sf.lambda == Partition{5, 3, 2, 1, 1} && sf.phi == std::vector<int>{1, 3, 5, 5, 5};
    });
    timed_fact(t, "march child", [&] {
        for (const auto& [i, child] : transition_children(code).marches) {
            if (i == 2) return code_to_permutation(child) == parse_permutation("57341268");
        }
        return false;
    });
    timed_fact(t, "31524 support", [&] {
        const Permutation v = parse_permutation("31524");
        const Code c = permutation_to_code(v);
        return coefficient_oracle(v, {2, 1, 1}) > 0 && coefficient_oracle(v, {4}) == 0 &&
               nonvanishing(c, {2, 1, 1}) && !nonvanishing(c, {4, 0, 0});
    });
    const Permutation big = parse_permutation("53861247");
    const Code big_code = permutation_to_code(big);
    timed_fact(t, "c_(4,2,5,3)", [&] {
        return big_code == Code{4, 2, 5, 3} && coefficient_oracle(big, {4, 2, 5, 3}) == 1 &&
               count_coefficient_transition(big_code, {4, 2, 5, 3}) == 1 && nonvanishing(big_code, {4, 2, 5, 3});
    });
    timed_fact(t, "transition leaves", [&] {
        const std::vector<std::pair<Exponent, std::string>> printed = {
            {{0, 0, 0, 1}, "73541268"}, {{0, 0, 0, 1}, "57341268"}, {{0, 0, 2, 1}, "53641278"},
            {{0, 0, 1, 1}, "63541278"}, {{0, 0, 1, 1}, "56341278"}, {{0, 0, 0, 0}, "74531268"},
            {{0, 0, 0, 0}, "57431268"}, {{0, 0, 2, 0}, "54631278"}, {{0, 0, 1, 0}, "64531278"},
            {{0, 0, 1, 0}, "56431278"}};
        std::multiset<std::pair<Exponent, Permutation>> expected, got;
        for (const auto& [e, p] : printed) expected.insert({e, parse_permutation(p)});
        for (const auto& term : transition_expand(big_code)) got.insert({term.weight, code_to_permutation(term.leaf)});
        return expected == got;
    });
    return {1, "golden facts", t.passed(), t.summary(), 0};
}

CriterionResult oracle_equivalence(Scope scope) {
    Tally t;
    const int n = sweep_n(scope);
    Permutation current;
    MultiPoly poly;
    for_each_instance(n, [&](const Permutation& w, const Code& code, const Diagram& d, const std::vector<int>& alpha) {
        if (!(w == current) || poly.is_zero()) {
            current = w;
            poly = schubert_divided_diff(w, n);
        }
        const bool nv = nonvanishing(code, alpha);
        const bool orc = poly.coefficient(alpha) > 0;
        const bool perfect = !enumerate_perfect(d, alpha).empty();
        const bool strict = !enumerate_column_strict(d, alpha).empty();
        t.check(nv == orc && orc == perfect && perfect == strict, [&] {
            std::ostringstream o;
            o << describe(w, alpha) << " lp=" << nv << " oracle=" << orc << " perfect=" << perfect << " strict=" << strict;
            return o.str();
        });
    });
    return {2, "exhaustive oracle equivalence (S_" + std::to_string(n) + ")", t.passed(), t.summary(), 0};
}

CriterionResult relaxation_equivalence(Scope scope) {
    Tally t;
    const int n = sweep_n(scope);
    for_each_instance(n, [&](const Permutation& w, const Code&, const Diagram& d, const std::vector<int>& alpha) {
        if (d.size() > 10) {
            t.fail("diagram above the 10-cell brute-force bound");
            return;
        }
        const bool lp = lp_feasible(build_P(d, alpha)).feasible;
        const bool integral = oracle::has_01_point(d, alpha);
        t.check(lp == integral, [&] { return describe(w, alpha) + " lp=" + std::to_string(lp); });
    });
    return {3, "relaxation equivalence (S_" + std::to_string(n) + ")", t.passed(), t.summary(), 0};
}

CriterionResult compression_equivalence(Scope scope) {
    Tally t;
    const int n = sweep_n(scope);
    for_each_instance(n, [&](const Permutation& w, const Code& code, const Diagram& d, const std::vector<int>& alpha) {
        const bool p = lp_feasible(build_P(d, alpha)).feasible;
        const CompressionData c = build_compression_rothe(code);
        const bool q = lp_feasible(build_Q(d, c, alpha)).feasible;
        t.check(p == q, [&] { return describe(w, alpha) + " P=" + std::to_string(p) + " Q=" + std::to_string(q); });
    });
    return {4, "compression equivalence (S_" + std::to_string(n) + ")", t.passed(), t.summary(), 0};
}

CriterionResult total_unimodularity(Scope scope) {
    Tally t;
    for (int n = 1; n <= 3; ++n) {
        const auto m = build_P_inequality_form(Diagram(n), std::vector<int>(static_cast<std::size_t>(n), 0)).dense();
        t.check(static_cast<int>(m.size()) == 3 * n * n + n, [&] { return "M has wrong height for n=" + std::to_string(n); });
        t.check(check_total_unimodularity(m), [&] { return "M not TU for n=" + std::to_string(n); });
        if (n <= 2) t.check(check_total_unimodularity_naive(m), [&] { return "naive minors fail for n=2"; });
    }

    const Diagram worked(2, {{1, 1}, {1, 2}, {2, 2}});
    const FeasibilitySystem ex = build_P_inequality_form(worked, {2, 1});
    const std::vector<Rational> b = {0, 0, 0, 0, 1, 1, 1, 1, 2, 1, -1, -1, -1, -2};
    const std::vector<std::vector<int>> m_b = {{1, 0, 1, 0}, {0, 1, 0, 1}};
    const std::vector<std::vector<int>> m_c = {{-1, 0, 0, 0}, {-1, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, -1, -1}};
    bool same = ex.rhs == b;
    const auto dense = ex.dense();
    for (int r = 0; r < 14 && same; ++r) {
        for (int c = 0; c < 4; ++c) {
            int expect = r < 4 ? -(r == c) : r < 8 ? (r - 4 == c) : r < 10 ? m_b[r - 8][c] : m_c[r - 10][c];
            same = same && dense[r][c] == expect;
        }
    }
    t.check(same, [] { return "worked n=2 blocks differ"; });
    t.check(check_total_unimodularity(dense) && check_total_unimodularity_naive(dense), [] { return "worked M not TU"; });

    const int n = sweep_n(scope);
    long vertices = 0;
    for_each_instance(n, [&](const Permutation& w, const Code&, const Diagram& d, const std::vector<int>& alpha) {
        const FeasibilitySystem sys = build_P(d, alpha);
        const LpResult res = lp_feasible(sys);
        if (!res.feasible) return;
        ++vertices;
        bool integral = std::all_of(res.point.begin(), res.point.end(), [](const Rational& q) { return q == 0 || q == 1; });
        t.check(integral && sys.satisfied_by(res.point), [&] { return describe(w, alpha) + " vertex not 0/1"; });
        if (!integral) return;
        const int dn = d.n();
        for (int j = 1; j <= dn; ++j) {
            Rational col = 0;
            for (int i = 1; i <= dn; ++i) col += res.point[static_cast<std::size_t>((j - 1) * dn + (i - 1))];
            t.check(col == static_cast<long>(d.column_rows(j).size()),
                    [&] { return describe(w, alpha) + " column sum differs in column " + std::to_string(j); });
        }
        std::vector<int> pt;
        for (const Rational& q : res.point) pt.push_back(q == 1 ? 1 : 0);
        Tableau tab = tableau_from_integral_point(d, pt);
        std::vector<int> want(static_cast<std::size_t>(dn), 0);
        std::copy(alpha.begin(), alpha.end(), want.begin());
        t.check(is_perfect(tab) && content(tab) == want, [&] { return describe(w, alpha) + " vertex tableau not perfect"; });
    });
    return {5, "total unimodularity", t.passed(), t.summary(std::to_string(vertices) + " vertices"), 0};
}

CriterionResult transition_identity(Scope scope) {
    Tally t;
    const int n = sweep_n(scope);
    long nodes = 0;
    for (const Permutation& w : all_permutations(n)) {
        const Code code = permutation_to_code(w);
        if (is_vexillary(code)) continue;
        ++nodes;
        const TransitionChildren kids = transition_children(code);
        const int r = kids.z.row;
        const Permutation w1 = oracle::swap_positions(w, r, w.inverse(kids.z.col));
        MultiPoly rhs = MultiPoly::variable(r) * schubert_divided_diff(code_to_permutation(kids.deletion), n);
        t.check(code_to_permutation(kids.deletion) == w1, [&] { return w.str() + " deletion child differs from w(r k)"; });
        for (const auto& [i, child] : kids.marches) {
            const Permutation w2 = code_to_permutation(child);
            t.check(w2 == oracle::swap_positions(w1, i, r), [&] { return w.str() + " march child differs from w'(i r)"; });
            rhs += schubert_divided_diff(w2, n);
        }
        t.check(rhs == schubert_divided_diff(w, n), [&] { return w.str() + " transition identity fails"; });
    }
    return {6, "transition identity (S_" + std::to_string(n) + ")", t.passed(),
            t.summary(std::to_string(nodes) + " non-vexillary permutations"), 0};
}

CriterionResult counting(Scope scope) {
    Tally t;
    const int n = sweep_n(scope);
    Permutation current;
    MultiPoly poly;
    for_each_instance(n, [&](const Permutation& w, const Code& code, const Diagram&, const std::vector<int>& alpha) {
        if (!(w == current) || poly.is_zero()) {
            current = w;
            poly = schubert_divided_diff(w, n);
        }
        const auto got = count_coefficient_transition(code, alpha);
        t.check(got == poly.coefficient(alpha), [&] { return describe(w, alpha) + " transition=" + std::to_string(got); });
    });
    const int max_size = scope == Scope::Quick ? 4 : 6;
    for (const Partition& lambda : oracle::partitions_up_to(max_size)) {
        const Permutation wl = grassmannian_for(lambda);
        const Code code = permutation_to_code(wl);
        Code reversed(lambda.rbegin(), lambda.rend());
        t.check(code == reversed, [&] { return "code of w_lambda for " + format_vector(lambda); });
        const int size = std::accumulate(lambda.begin(), lambda.end(), 0);
        const MultiPoly sw = schubert_divided_diff(wl);
        for (const auto& alpha : oracle::compositions(size, static_cast<int>(lambda.size()))) {
            const auto k = kostka(lambda, alpha);
            t.check(count_coefficient_transition(code, alpha) == k && sw.coefficient(alpha) == k,
                    [&] { return "lambda=" + format_vector(lambda) + " alpha=" + format_vector(alpha); });
        }
    }
    return {7, "counting correctness", t.passed(), t.summary(), 0};
}

CriterionResult pattern_bounds(Scope scope) {
    Tally t;
    const int n = scope == Scope::Quick ? 5 : 6;
    for (const Permutation& w : all_permutations(n)) {
        const MultiPoly p = schubert_divided_diff(w, n);
        const auto bound = count_132(w) + 1;
        t.check(static_cast<std::int64_t>(p.terms().size()) >= bound, [&] { return w.str() + " support below bound"; });
        t.check(principal_specialization(w) >= bound, [&] { return w.str() + " specialization below bound"; });
    }
    return {8, "132-pattern bounds (S_" + std::to_string(n) + ")", t.passed(), t.summary(), 0};
}

std::set<Cell> preimage(const Tableau& tab, SubsetS s) {
    std::set<Cell> cells;
    for (const auto& [c, label] : tab.labels()) {
        if (label != kUnlabeled && s.contains(label)) cells.insert(c);
    }
    return cells;
}

void check_greedy(Tally& t, const Diagram& d, bool enumerate_all) {
    const int n = d.n();
    const unsigned full = (1u << n);
    std::vector<Tableau> all;
    if (enumerate_all) all = enumerate_fcitab(d);
    std::vector<std::set<Cell>> pre(full);
    std::ostringstream name;
    for (const Cell& c : d.cells()) name << '(' << c.row << ',' << c.col << ')';
    const std::string label = "n=" + std::to_string(n) + " D=" + name.str();

    for (unsigned bits = 0; bits < full; ++bits) {
        const SubsetS s{bits};
        const Tableau pi = greedy_tableau(d, s);
        pre[bits] = preimage(pi, s);
        const int count = static_cast<int>(pre[bits].size());
        t.check(theta(d, s) == count, [&] { return label + " theta differs from greedy count"; });
        t.check(is_flagged(pi) && is_column_injective(pi), [&] { return label + " greedy tableau not FCI"; });
        for (const Cell& cell : d.cells()) {
            int above = 0, allowed = 0;
            for (const Cell& c : pre[bits])
                if (c.col == cell.col && c.row < cell.row) ++above;
            for (int i = 1; i <= cell.row; ++i)
                if (s.contains(i)) ++allowed;
            t.check(pre[bits].count(cell) == static_cast<std::size_t>(above < allowed),
                    [&] { return label + " greedy characterization fails"; });
        }
        t.check(count == oracle::max_fci_preimage(d, s), [&] { return label + " greedy not optimal"; });
        for (const Tableau& tau : all) {
            t.check(count_in(tau, s) <= count, [&] { return label + " FCI tableau beats greedy"; });
        }
    }
    for (unsigned s = 0; s < full; ++s) {
        for (unsigned u = 0; u < full; ++u) {
            if ((s & u) == s) {
                t.check(std::includes(pre[u].begin(), pre[u].end(), pre[s].begin(), pre[s].end()),
                        [&] { return label + " greedy preimages not nested"; });
            }
            if ((s & u) != 0) continue;
            Diagram rest = d;
            for (const Cell& c : pre[s]) rest.erase(c);
            std::set<Cell> joined = pre[s];
            const std::set<Cell> tail = preimage(greedy_tableau(rest, SubsetS{u}), SubsetS{u});
            joined.insert(tail.begin(), tail.end());
            t.check(joined == pre[s | u], [&] { return label + " greedy union property fails"; });
        }
    }
}

CriterionResult greedy_structure(Scope scope, std::uint64_t seed) {
    Tally t;
    long exhaustive = 0;
    for (int n = 1; n <= 3; ++n) {
        const int cells = n * n;
        for (unsigned mask = 0; mask < (1u << cells); ++mask) {
            Diagram d(n);
            for (int k = 0; k < cells; ++k)
                if (mask & (1u << k)) d.insert({k / n + 1, k % n + 1});
            check_greedy(t, d, std::popcount(mask) <= 6);
            ++exhaustive;
        }
    }
    std::mt19937_64 rng(seed);
    const int samples = scope == Scope::Quick ? 200 : 1000;
    for (int k = 0; k < samples; ++k) {
        const int n = std::uniform_int_distribution<int>(1, 5)(rng);
        const double p = std::uniform_real_distribution<double>(0.15, 0.75)(rng);
        std::bernoulli_distribution coin(p);
        Diagram d(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (coin(rng)) d.insert({i, j});
        check_greedy(t, d, d.size() <= 8);
    }
    return {9, "greedy and theta structure", t.passed(),
            t.summary(std::to_string(exhaustive) + " exhaustive + " + std::to_string(samples) + " random diagrams"), 0};
}

CriterionResult complexity_smoke(Scope scope, std::uint64_t seed) {
    Tally t;
    std::mt19937_64 rng(seed);
    const std::vector<int> lengths = {10, 20, 40};
    const int samples = scope == Scope::Quick ? 3 : 7;
    const auto calls_before = oracle_invocations();
    std::vector<double> xs, ys;
    std::ostringstream medians;
    for (int L : lengths) {
        std::vector<double> times;
        for (int k = 0; k < samples; ++k) {
            Code code(static_cast<std::size_t>(L));
            for (int i = 0; i < L; ++i) {
                const int hi = std::max(1, L - 1 - i);
                code[static_cast<std::size_t>(i)] = std::uniform_int_distribution<int>(i + 1 < L ? 0 : 1, hi)(rng);
            }
            std::vector<int> alpha(static_cast<std::size_t>(L), 0);
            std::uniform_int_distribution<int> row(0, L - 1);
            for (int c = 0; c < code_degree(code); ++c) ++alpha[static_cast<std::size_t>(row(rng))];
            auto t0 = Clock::now();
            try {
                nonvanishing(code, alpha);
            } catch (const std::exception& e) {
                t.fail("L=" + std::to_string(L) + " threw: " + e.what());
                continue;
            }
            times.push_back(seconds_since(t0));
        }
        if (times.empty()) continue;
        std::sort(times.begin(), times.end());
        const double median = times[times.size() / 2];
        medians << (xs.empty() ? "" : " ") << "L=" << L << ":" << std::fixed << std::setprecision(4) << median << "s";
        xs.push_back(std::log(L));
        ys.push_back(std::log(std::max(median, 1e-6)));
    }
    double slope = 0;
    if (xs.size() >= 2) {
        const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
        const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
        double sxy = 0, sxx = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxy += (xs[i] - mx) * (ys[i] - my);
            sxx += (xs[i] - mx) * (xs[i] - mx);
        }
        slope = sxy / sxx;
    }
    t.check(xs.size() == lengths.size(), [] { return "not every length completed"; });
    t.check(slope <= 6.0, [&] { return "fitted exponent " + std::to_string(slope) + " above 6"; });
    t.check(oracle_invocations() == calls_before, [] { return "divided-difference oracle was invoked"; });
    std::ostringstream extra;
    extra << medians.str() << " fit exponent " << std::fixed << std::setprecision(2) << slope;
    return {10, "complexity smoke test", t.passed(), t.summary(extra.str()), 0};
}

}  // namespace

CriterionResult run_criterion(int id, const SelftestOptions& opts) {
    auto t0 = Clock::now();
    CriterionResult r;
    try {
        switch (id) {
        case 1: r = golden_facts(); break;
        case 2: r = oracle_equivalence(opts.scope); break;
        case 3: r = relaxation_equivalence(opts.scope); break;
        case 4: r = compression_equivalence(opts.scope); break;
        case 5: r = total_unimodularity(opts.scope); break;
        case 6: r = transition_identity(opts.scope); break;
        case 7: r = counting(opts.scope); break;
        case 8: r = pattern_bounds(opts.scope); break;
        case 9: r = greedy_structure(opts.scope, opts.seed); break;
        case 10: r = complexity_smoke(opts.scope, opts.seed); break;
        default: throw InputError("no criterion " + std::to_string(id));
        }
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), 0};
    }
    r.seconds = seconds_since(t0);
    return r;
}

std::vector<CriterionResult> run_selftest(const SelftestOptions& opts) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) {
        out.push_back(run_criterion(id, opts));
        if (opts.on_result) opts.on_result(out.back());
    }
    return out;
}

std::string format_result_line(const CriterionResult& r) {
    std::ostringstream out;
    out << (r.passed ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << r.id << "  " << r.name << "  ("
        << std::fixed << std::setprecision(2) << r.seconds << " s)  " << r.detail;
    return out.str();
}

}  // namespace schub
