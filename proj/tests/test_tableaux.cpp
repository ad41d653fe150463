#include <doctest.h>

#include <functional>

#include "schub/oracles.hpp"
#include "schub/tableaux.hpp"

using namespace schub;

namespace {

const Diagram kShape(5, {{1, 1}, {1, 2}, {2, 5}, {3, 2}, {3, 4}, {3, 5}, {4, 2}, {5, 4}});

Tableau fill(std::vector<int> labels) {
    std::map<Cell, int> m;
    std::size_t k = 0;
    for (const Cell& c : kShape.cells()) m[c] = labels[k++];
    return Tableau(kShape, m);
}

// Every map D -> [n] u {unlabeled}, filtered by a predicate.
long count_all(const Diagram& d, const std::function<bool(const Tableau&)>& keep) {
    std::vector<Cell> cells(d.cells().begin(), d.cells().end());
    Tableau t(d);
    long total = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            total += keep(t);
            return;
        }
        for (int label = 0; label <= d.n(); ++label) {
            t.set(cells[k], label);
            rec(k + 1);
        }
    };
    rec(0);
    return total;
}

}  // namespace

TEST_CASE("the four tableaux of one shape") {
    // Cells in (row, col) order: (1,1) (1,2) (2,5) (3,2) (3,4) (3,5) (4,2) (5,4).
    const Tableau t1 = fill({1, 1, 2, 5, 4, 0, 2, 4});
    const Tableau t2 = fill({1, 1, 2, 3, 2, 0, 2, 2});
    const Tableau t3 = fill({1, 1, 2, 5, 4, 0, 0, 3});
    const Tableau t4 = fill({1, 1, 0, 3, 3, 0, 2, 4});
    CHECK_FALSE(is_flagged(t1));
    CHECK(is_flagged(t2));
    CHECK_FALSE(is_flagged(t3));
    CHECK(is_flagged(t4));
    CHECK_FALSE(is_column_injective(t1));
    CHECK_FALSE(is_column_injective(t2));
    CHECK(is_column_injective(t3));
    CHECK(is_column_injective(t4));
    CHECK_FALSE(is_perfect(t4));
    CHECK(content(t4) == std::vector<int>{2, 1, 2, 1, 0});
    CHECK(count_in(t4, SubsetS::of({1, 3})) == 4);
}

TEST_CASE("enumeration matches filtering all maps") {
    const Diagram d(3, {{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 3}});
    const auto fci = enumerate_fcitab(d);
    CHECK(static_cast<long>(fci.size()) ==
          count_all(d, [](const Tableau& t) { return is_flagged(t) && is_column_injective(t); }));
    const auto perfect = enumerate_perfect(d);
    CHECK(static_cast<long>(perfect.size()) == count_all(d, [](const Tableau& t) { return is_perfect(t); }));
    const auto strict = enumerate_column_strict(d);
    CHECK(static_cast<long>(strict.size()) ==
          count_all(d, [](const Tableau& t) { return is_perfect(t) && is_column_strict(t); }));
    for (const auto& t : fci) CHECK(is_flagged(t));
    for (const auto& alpha : oracle::compositions(5, 3)) {
        CHECK(enumerate_perfect(d, alpha).empty() == enumerate_column_strict(d, alpha).empty());
        for (const auto& t : enumerate_perfect(d, alpha)) CHECK(content(t) == alpha);
    }
}

TEST_CASE("enumeration respects the cell budget") {
    Diagram d(4);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) d.insert({i, j});
    CHECK_THROWS_AS(enumerate_fcitab(d), BudgetError);
}

TEST_CASE("exhausts pads alpha") {
    const Diagram d(2, {{1, 1}, {2, 1}});
    const Tableau t(d, {{{1, 1}, 1}, {{2, 1}, 2}});
    CHECK(exhausts(t, {1}, SubsetS::of({1})));
    CHECK(exhausts(t, {1, 1}, SubsetS::of({1, 2})));
    CHECK_FALSE(exhausts(t, {2}, SubsetS::of({1})));
}

TEST_CASE("integral point round trip") {
    const Diagram d(3, {{1, 1}, {2, 1}, {2, 2}, {3, 3}});
    for (const auto& t : enumerate_perfect(d)) {
        const auto point = tableau_to_point(t);
        CHECK(point.size() == 9);
        CHECK(tableau_from_integral_point(d, point) == t);
    }
}

TEST_CASE("flagged semistandard tableaux") {
    const auto all = enumerate_flagged_ssyt({2, 1}, {2, 3});
    CHECK(all.size() == 5);
    for (const auto& alpha : oracle::compositions(3, 3)) {
        const auto some = enumerate_flagged_ssyt({2, 1}, {2, 3}, alpha);
        CHECK(static_cast<std::int64_t>(some.size()) == count_flagged_ssyt({2, 1}, {2, 3}, alpha));
        for (const auto& t : some) CHECK(ssyt_content(t, 3) == alpha);
    }
    CHECK(count_flagged_ssyt({2, 1}, {3, 3}, {1, 1, 1}) == 2);
    CHECK_THROWS_AS(enumerate_flagged_ssyt({2, 1}, {2}), InputError);
}

TEST_CASE("row count matrices") {
    const std::vector<std::vector<int>> rows = {{1, 1, 2}, {2, 3}};
    const RowCountMatrix r = row_count_matrix(rows, 3);
    CHECK(r == RowCountMatrix{{2, 1, 0}, {0, 1, 1}, {0, 0, 0}});
    CHECK(validate_row_count_matrix(r, {3, 2}, {2, 3}));
    CHECK_FALSE(validate_row_count_matrix(r, {3, 2}, {1, 3}));
    CHECK(decode_row_count_matrix(r) == std::vector<std::vector<int>>{{1, 1, 2}, {2, 3}});
    const RowCountMatrix bad = {{1, 1, 0}, {1, 1, 0}, {0, 0, 0}};
    CHECK_FALSE(validate_row_count_matrix(bad, {2, 2}, {2, 2}));
}
