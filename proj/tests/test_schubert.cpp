#include <doctest.h>

#include <random>

#include "schub/oracles.hpp"
#include "schub/schubert.hpp"

using namespace schub;

namespace {

MultiPoly random_poly(std::mt19937& rng, int vars, int terms) {
    std::uniform_int_distribution<int> exp(0, 3), coeff(-4, 4);
    MultiPoly f;
    for (int t = 0; t < terms; ++t) {
        Exponent e(static_cast<std::size_t>(vars));
        for (int& x : e) x = exp(rng);
        f.add_term(e, coeff(rng));
    }
    return f;
}

MultiPoly x(int i) { return MultiPoly::variable(i); }

}  // namespace

TEST_CASE("polynomial arithmetic and serialization") {
    const MultiPoly f = x(1) * x(1) + x(2) * x(3) - MultiPoly::constant(2);
    CHECK(f.serialize(3) == "-2 0,0,0\n1 0,1,1\n1 2,0,0\n");
    CHECK(f.coefficient({2, 0, 0, 0}) == 1);
    CHECK(f.num_vars() == 3);
    CHECK((f - f).is_zero());
    CHECK(MultiPoly::monomial({1, 0, 0}) == x(1));
    CHECK(trim_exponent({1, 0, 2, 0, 0}) == Exponent{1, 0, 2});
}

TEST_CASE("divided differences") {
    CHECK(divided_difference(x(1), 1) == MultiPoly::constant(1));
    CHECK(divided_difference(x(1) * x(1), 1) == x(1) + x(2));
    CHECK(divided_difference(x(3), 1).is_zero());

    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const MultiPoly f = random_poly(rng, 4, 6);
        CHECK(divided_difference(divided_difference(f, 1), 3) == divided_difference(divided_difference(f, 3), 1));
        CHECK(divided_difference(divided_difference(divided_difference(f, 1), 2), 1) ==
              divided_difference(divided_difference(divided_difference(f, 2), 1), 2));
        CHECK(divided_difference(divided_difference(f, 2), 2).is_zero());
        CHECK(swap_variables(swap_variables(f, 2), 2) == f);
    }
}

TEST_CASE("Schubert polynomial of 31524") {
    const MultiPoly s = schubert_divided_diff(parse_permutation("31524"));
    const MultiPoly expected = MultiPoly::monomial({2, 0, 2}) + MultiPoly::monomial({2, 1, 1}) +
                               MultiPoly::monomial({2, 2, 0}) + MultiPoly::monomial({3, 0, 1}) +
                               MultiPoly::monomial({3, 1, 0});
    CHECK(s == expected);
    CHECK(principal_specialization(parse_permutation("31524")) == 5);
}

TEST_CASE("Schubert polynomials do not depend on the ambient n") {
    for (const Permutation& w : all_permutations(4)) {
        CHECK(schubert_divided_diff(w, 4) == schubert_divided_diff(w, 6));
    }
    CHECK_THROWS_AS(schubert_divided_diff(Permutation(), 9), BudgetError);
    CHECK_THROWS_AS(schubert_divided_diff(parse_permutation("4321"), 3), InputError);
}

TEST_CASE("nonvanishing on the running examples") {
    CHECK(nonvanishing({2, 0, 2}, {2, 1, 1}));
    CHECK_FALSE(nonvanishing({2, 0, 2}, {4, 0, 0}));
    CHECK_FALSE(nonvanishing({2, 0, 2}, {1, 1, 1, 1}));
    CHECK_FALSE(nonvanishing({2, 0, 2}, {1, 1, 1}));
    CHECK(nonvanishing({}, {}));
    CHECK(nonvanishing({4, 2, 5, 3}, {4, 2, 5, 3}));
    CHECK_THROWS_AS(nonvanishing({2, 0, 2}, {4}), InputError);
    CHECK_THROWS_AS(nonvanishing({2, 0, 2}, {5, -1, 0}), InputError);
}

TEST_CASE("witness tableaux") {
    for (const Permutation& w : all_permutations(4)) {
        const Code code = permutation_to_code(w);
        for (const auto& alpha : oracle::compositions(code_degree(code), static_cast<int>(code.size()))) {
            const auto t = tableau_witness(code, alpha);
            CHECK(t.has_value() == nonvanishing(code, alpha));
            if (!t) continue;
            CHECK(is_perfect(*t));
            CHECK(is_column_strict(*t));
        }
    }
}

TEST_CASE("transition children of 53841267") {
    const TransitionChildren kids = transition_children({4, 2, 5, 2});
    CHECK(kids.z == Cell{3, 7});
    CHECK(kids.deletion == Code{4, 2, 4, 2});
    REQUIRE(kids.marches.size() == 2);
    CHECK(kids.marches[0].first == 1);
    CHECK(code_to_permutation(kids.marches[0].second) == parse_permutation("7354126"));
    CHECK(kids.marches[1].first == 2);
    CHECK(code_to_permutation(kids.marches[1].second) == parse_permutation("57341268"));
    CHECK_THROWS_AS(transition_children({5, 1, 3, 1, 2}), InputError);
}

TEST_CASE("transition expansion of 53861247") {
    const auto terms = transition_expand({4, 2, 5, 3});
    CHECK(terms.size() == 10);
    for (const auto& t : terms) CHECK(is_vexillary(t.leaf));
    MultiPoly sum;
    for (const auto& t : terms) {
        const ShapeFlag sf = shape_and_flag(t.leaf);
        sum += MultiPoly::monomial(t.weight) * flagged_schur(sf.lambda, sf.phi);
    }
    CHECK(sum == schubert_divided_diff(parse_permutation("53861247")));
}

TEST_CASE("vexillary Schubert polynomials are flagged Schur functions") {
    for (const Permutation& w : all_permutations(6)) {
        const Code code = permutation_to_code(w);
        if (!is_vexillary(code)) continue;
        const ShapeFlag sf = shape_and_flag(code);
        CHECK(flagged_schur(sf.lambda, sf.phi) == schubert_divided_diff(w, 6));
    }
    CHECK(complete_homogeneous(2, 2) == x(1) * x(1) + x(1) * x(2) + x(2) * x(2));
}

TEST_CASE("Kostka numbers") {
    CHECK(kostka({2, 1}, {1, 1, 1}) == 2);
    CHECK(kostka({3, 2}, {2, 2, 1}) == 2);
    CHECK(kostka({2, 2}, {3, 1}) == 0);
    CHECK(kostka({}, {}) == 1);
}

TEST_CASE("witness pairs account for every coefficient on S_4") {
    for (const Permutation& w : all_permutations(4)) {
        const Code code = permutation_to_code(w);
        for (const auto& alpha : oracle::compositions(code_degree(code), static_cast<int>(code.size()))) {
            const auto pairs = enumerate_witnesses(code, alpha);
            CHECK(static_cast<std::int64_t>(pairs.size()) == coefficient_oracle(w, alpha));
            for (const auto& p : pairs) CHECK(verify_witness(p, code, alpha));
        }
    }
}

TEST_CASE("witness verification rejects tampering") {
    const Code code = {4, 2, 5, 3};
    const std::vector<int> alpha = {4, 2, 5, 3};
    const auto pairs = enumerate_witnesses(code, alpha);
    REQUIRE(pairs.size() == 1);
    CHECK(format_transition_string(pairs[0].steps) == "((x4,1),(x3,2))");
    CHECK(verify_witness(pairs[0], code, alpha));
    WitnessPair bad = pairs[0];
    bad.steps.back().row = 2;
    CHECK_FALSE(verify_witness(bad, code, alpha));
    bad = pairs[0];
    bad.r[0][0] += 1;
    CHECK_FALSE(verify_witness(bad, code, alpha));
    CHECK_FALSE(verify_witness(pairs[0], code, {4, 3, 4, 3}));
}

TEST_CASE("transition counts match the oracle on S_5 and at depth") {
    for (const Permutation& w : all_permutations(5)) {
        const Code code = permutation_to_code(w);
        const MultiPoly poly = schubert_divided_diff(w, 5);
        for (const auto& [e, c] : poly.terms()) {
            std::vector<int> alpha = e;
            alpha.resize(code.size(), 0);
            CHECK(count_coefficient_transition(code, alpha) == c);
        }
    }
    CHECK(count_coefficient_transition({4, 2, 5, 3}, {4, 2, 5, 3}) == 1);
}

TEST_CASE("transition identity over S_6") {
    for (const Permutation& w : all_permutations(6)) {
        const Code code = permutation_to_code(w);
        if (is_vexillary(code)) continue;
        const TransitionChildren kids = transition_children(code);
        MultiPoly rhs = x(kids.z.row) * schubert_divided_diff(code_to_permutation(kids.deletion), 6);
        for (const auto& [i, child] : kids.marches) rhs += schubert_divided_diff(code_to_permutation(child), 6);
        CHECK(rhs == schubert_divided_diff(w, 6));
    }
}
