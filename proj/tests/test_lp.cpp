#include <doctest.h>

#include <random>

#include "schub/lp.hpp"
#include "schub/oracles.hpp"

using namespace schub;

namespace {

std::vector<Rational> to_rationals(const std::vector<int>& v) { return {v.begin(), v.end()}; }

const Diagram kSmall(2, {{1, 1}, {1, 2}, {2, 2}});

}  // namespace

TEST_CASE("rational formatting") {
    CHECK(to_string(Rational(1, 4) * 2) == "1/2");
    CHECK(to_string(Rational(-4) / 2) == "-2");
}

TEST_CASE("simplex on small systems") {
    FeasibilitySystem sys;
    sys.cols = 2;
    sys.names = {"x", "y"};
    sys.add_row({{0, 1}, {1, 1}}, RowKind::Equal, 1);
    sys.add_row({{0, 1}, {1, -1}}, RowKind::LessEq, Rational(-1, 2));
    sys.add_row({{0, -1}}, RowKind::LessEq, 0);
    sys.add_row({{1, -1}}, RowKind::LessEq, 0);
    const LpResult r = lp_feasible(sys);
    REQUIRE(r.feasible);
    CHECK(sys.satisfied_by(r.point));
    CHECK(r.point[0] <= Rational(1, 4));

    sys.add_row({{1, 1}}, RowKind::LessEq, Rational(1, 2));
    CHECK_FALSE(lp_feasible(sys).feasible);
}

TEST_CASE("free variables and negative right-hand sides") {
    FeasibilitySystem sys;
    sys.cols = 3;
    sys.names = {"a", "b", "c"};
    sys.add_row({{0, 1}, {1, -2}, {2, 3}}, RowKind::Equal, -7);
    sys.add_row({{0, -1}, {2, 1}}, RowKind::LessEq, -2);
    const LpResult r = lp_feasible(sys);
    REQUIRE(r.feasible);
    CHECK(sys.satisfied_by(r.point));
}

TEST_CASE("P for the two-row example") {
    const FeasibilitySystem p = build_P(kSmall, {2, 1});
    CHECK(p.cols == 4);
    CHECK(p.rows.size() == 14);
    CHECK(p.names == std::vector<std::string>{"x_1_1", "x_2_1", "x_1_2", "x_2_2"});
    CHECK(p.kinds[8] == RowKind::Equal);
    CHECK(p.kinds[9] == RowKind::Equal);
    CHECK(p.rhs[8] == 2);
    CHECK(p.rhs[13] == -2);
    const LpResult r = lp_feasible(p);
    REQUIRE(r.feasible);
    CHECK(r.point == to_rationals({1, 0, 1, 1}));
    const auto v = integral_vertex(p, 2);
    REQUIRE(v.has_value());
    CHECK(v->coords == std::vector<int>{1, 0, 1, 1});
    CHECK(v->at(2, 2) == 1);

    CHECK_FALSE(lp_feasible(build_P(kSmall, {3, 0})).feasible);
    CHECK_FALSE(integral_vertex(build_P(kSmall, {3, 0}), 2).has_value());
    CHECK_THROWS_AS(build_P(kSmall, {1, 1}), InputError);
    CHECK_THROWS_AS(build_P(kSmall, {4, -1}), InputError);
}

TEST_CASE("LP text format") {
    const std::string text = to_lp_text(build_P(kSmall, {2, 1}));
    CHECK(text.find("-1*x_1_1 <= 0\n") == 0);
    CHECK(text.find("+1*x_1_1 +1*x_1_2 = 2\n") != std::string::npos);
    CHECK(text.find("-1*x_1_2 -1*x_2_2 <= -2\n") != std::string::npos);
}

TEST_CASE("total unimodularity checks") {
    using M = std::vector<std::vector<Rational>>;
    CHECK_FALSE(check_total_unimodularity(M{{1, 1}, {1, -1}}));
    CHECK_FALSE(check_total_unimodularity_naive(M{{1, 1}, {1, -1}}));
    CHECK_FALSE(check_total_unimodularity(M{{2, 0}}));
    CHECK(check_total_unimodularity(M{{1, 1, 0}, {0, 1, 1}}));
    CHECK_FALSE(check_total_unimodularity(M{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
    CHECK(check_total_unimodularity(M{{1, 0}, {-1, 0}, {0, 1}, {1, 1}, {-1, -1}}));

    const auto m2 = build_P_inequality_form(Diagram(2), {0, 0}).dense();
    CHECK(check_total_unimodularity(m2));
    CHECK(check_total_unimodularity_naive(m2));
}

TEST_CASE("reduced and naive TU agree on random small matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-1, 1);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4));
        for (auto& row : m)
            for (auto& x : row) x = entry(rng);
        if (trial % 3 == 0) m.push_back(m[0]);
        CHECK(check_total_unimodularity(m) == check_total_unimodularity_naive(m));
    }
}

TEST_CASE("Rothe compression of 53841267") {
    const CompressionData c = build_compression_rothe({4, 2, 5, 2});
    CHECK(c.blocks == std::vector<std::vector<int>>{{1, 2}, {3}, {4}, {5}, {6, 7}, {8}});
    CHECK(c.reps == std::vector<int>{1, 3, 4, 5, 6, 8});
    CHECK(c.sizes == std::vector<int>{2, 1, 1, 1, 2, 1});
    validate_compression(rothe_diagram(parse_permutation("53841267")), c);
}

TEST_CASE("Rothe compression blocks hold identical columns over S_6") {
    for (const Permutation& w : all_permutations(6)) {
        const Code code = permutation_to_code(w);
        const CompressionData c = build_compression_rothe(code);
        const Diagram d = rothe_diagram(w);
        CHECK_NOTHROW(validate_compression(d, c));
        for (const auto& block : c.blocks)
            for (int col : block) CHECK(d.column_rows(col) == d.column_rows(block.front()));
    }
}

TEST_CASE("a bad compression is rejected") {
    CompressionData c = trivial_compression(kSmall);
    c.blocks = {{1, 2}};
    c.reps = {1};
    c.sizes = {2};
    c.m = 1;
    CHECK_THROWS_AS(validate_compression(kSmall, c), InputError);
}

TEST_CASE("Q with the trivial compression is P") {
    const std::vector<int> alpha = {2, 1};
    const FeasibilitySystem q = build_Q(kSmall, trivial_compression(kSmall), alpha);
    const FeasibilitySystem p = build_P(kSmall, alpha);
    CHECK(to_lp_text(q) == to_lp_text(p));
}

TEST_CASE("Q for a code with huge entries stays small") {
    const Code code = {999990, 0, 999989};
    const CompressionData c = build_compression_rothe(code);
    CHECK(c.m == 3);
    CHECK(c.blocks.size() <= 6);
    CHECK(lp_feasible(build_Q(c, code)).feasible);
    CHECK_FALSE(lp_feasible(build_Q(c, {0, 999990, 999989})).feasible);
}

TEST_CASE("stable-sequence rounding of averaged tableaux") {
    const Diagram d = rothe_diagram(parse_permutation("31524"));
    int averaged = 0;
    for (const auto& alpha : oracle::compositions(d.size(), 3)) {
        const auto tabs = enumerate_perfect(d, alpha);
        if (tabs.size() < 2) continue;
        ++averaged;
        std::vector<Rational> avg(static_cast<std::size_t>(d.n() * d.n()), 0);
        for (const auto& t : tabs) {
            const auto pt = tableau_to_point(t);
            for (std::size_t k = 0; k < pt.size(); ++k) avg[k] += Rational(pt[k]) / static_cast<long>(tabs.size());
        }
        const FeasibilitySystem p = build_P(d, alpha);
        REQUIRE(p.satisfied_by(avg));
        const std::vector<int> rounded = round_by_stable_sequences(d, alpha, avg);
        CHECK(p.satisfied_by(to_rationals(rounded)));
        const Tableau t = tableau_from_integral_point(d, rounded);
        CHECK(is_perfect(t));
        std::vector<int> want = alpha;
        want.resize(static_cast<std::size_t>(d.n()), 0);
        CHECK(content(t) == want);
    }
    CHECK(averaged > 0);
}
