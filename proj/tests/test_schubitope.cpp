#include <doctest.h>

#include "schub/oracles.hpp"
#include "schub/schubert.hpp"
#include "schub/schubitope.hpp"

using namespace schub;

namespace {

const Diagram kWordShape(5, {{1, 1}, {2, 2}, {3, 2}, {3, 5}, {4, 1}, {4, 2}, {4, 3}, {4, 5}, {5, 1}, {5, 2}});

}  // namespace

TEST_CASE("column words for S = {1,3}") {
    const SubsetS s = SubsetS::of({1, 3});
    CHECK(to_string(column_word(kWordShape, 1, s)) == "⋆())");
    CHECK(to_string(column_word(kWordShape, 2, s)) == "()⋆))");
    CHECK(to_string(column_word(kWordShape, 3, s)) == "(()");
    CHECK(to_string(column_word(kWordShape, 4, s)) == "((");
    CHECK(to_string(column_word(kWordShape, 5, s)) == "(⋆)");
    CHECK(theta(kWordShape, s) == 7);
}

TEST_CASE("greedy tableau for S = {1,3}") {
    const Tableau pi = greedy_tableau(kWordShape, SubsetS::of({1, 3}));
    const std::map<Cell, int> expected = {{{1, 1}, 1}, {{2, 2}, 1}, {{3, 2}, 3}, {{3, 5}, 3}, {{4, 1}, 3},
                                          {{4, 2}, 0}, {{4, 3}, 3}, {{4, 5}, 1}, {{5, 1}, 0}, {{5, 2}, 0}};
    CHECK(pi.labels() == expected);
    CHECK(is_flagged(pi));
    CHECK(is_column_injective(pi));
}

TEST_CASE("theta is the best FCI count") {
    for (unsigned bits = 0; bits < 32; ++bits) {
        const SubsetS s{bits};
        CHECK(theta(kWordShape, s) == oracle::max_fci_preimage(kWordShape, s));
    }
}

TEST_CASE("theta of the empty set and of everything") {
    CHECK(theta(kWordShape, SubsetS{}) == 0);
    CHECK(theta(kWordShape, SubsetS{31}) == kWordShape.size());
}

TEST_CASE("Schubitope membership matches the Schubert support over S_5") {
    for (const Permutation& w : all_permutations(5)) {
        const Code code = permutation_to_code(w);
        const Diagram d = rothe_diagram(w, 5);
        const MultiPoly poly = schubert_divided_diff(w, 5);
        for (const auto& alpha : oracle::compositions(d.size(), 5)) {
            CHECK(membership_bruteforce(d, alpha) == (poly.coefficient(alpha) > 0));
        }
    }
}

TEST_CASE("membership rejects the wrong degree") {
    CHECK_FALSE(membership_bruteforce(kWordShape, {1, 1}));
    CHECK_FALSE(membership_bruteforce(kWordShape, {-1, 11}));
}
