#include <doctest.h>

#include <algorithm>

#include "schub/oracles.hpp"
#include "schub/permutations.hpp"

using namespace schub;

namespace {

int inversions(const Permutation& w) {
    int count = 0;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(i) > w(j)) ++count;
    return count;
}

std::int64_t brute_132(const Permutation& w) {
    std::int64_t count = 0;
    const int m = w.size();
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            for (int c = b + 1; c <= m; ++c)
                if (w(a) < w(c) && w(c) < w(b)) ++count;
    return count;
}

}  // namespace

TEST_CASE("parsing and display") {
    CHECK(parse_permutation("53841267").str() == "53841267");
    CHECK(parse_permutation("57341268").str() == "5734126");
    CHECK(parse_permutation("1234").is_identity());
    CHECK(parse_permutation("10,1,2,3,4,5,6,7,8,9")(1) == 10);
    CHECK_THROWS_AS(parse_permutation("1123"), InputError);
    CHECK_THROWS_AS(parse_permutation("1x3"), InputError);
    CHECK_THROWS_AS(parse_code("1,-1"), InputError);
    CHECK(parse_code("2,0,2,0,0") == Code{2, 0, 2});
    CHECK_THROWS_AS(parse_partition("1,2"), InputError);
}

TEST_CASE("code of the running example") {
    const Permutation w = parse_permutation("53841267");
    CHECK(permutation_to_code(w) == Code{4, 2, 5, 2});
    CHECK(code_degree(permutation_to_code(w)) == inversions(w));
    CHECK(code_to_permutation({4, 2, 5, 2}) == w);
    CHECK(permutation_to_code(parse_permutation("31524")) == Code{2, 0, 2});
}

TEST_CASE("code round trip over S_6") {
    for (const Permutation& w : all_permutations(6)) {
        const Code c = permutation_to_code(w);
        CHECK(code_to_permutation(c) == w);
        CHECK(code_degree(c) == inversions(w));
        const auto prefix = code_prefix_values(c);
        for (std::size_t i = 0; i < prefix.size(); ++i) CHECK(prefix[i] == w(static_cast<int>(i) + 1));
    }
}

TEST_CASE("code_prefix_values does not depend on entry size") {
    const Code big = {1000000, 0, 999999};
    const auto prefix = code_prefix_values(big);
    CHECK(prefix == std::vector<std::int64_t>{1000001, 1, 1000002});
    CHECK(is_vexillary(big));
    CHECK_FALSE(is_vexillary({1000000, 0, 1000001, 1}));
}

TEST_CASE("Rothe diagram agrees with the ray definition") {
    for (const Permutation& w : all_permutations(5)) {
        const Diagram d = rothe_diagram(w, 5);
        CHECK(d == oracle::rothe_by_definition(w, 5));
        CHECK(d.size() == inversions(w));
    }
}

TEST_CASE("essential set of 53841267") {
    const Diagram d = rothe_diagram(parse_permutation("53841267"));
    CHECK(essential_set(d) == std::set<Cell>{{1, 4}, {3, 4}, {3, 7}, {4, 2}});
    std::vector<int> rows = dominant_component(d).row_counts();
    rows.resize(4);
    CHECK(rows == std::vector<int>{4, 2, 2, 2});
}

TEST_CASE("essential set agrees with the rank description over S_6") {
    for (const Permutation& w : all_permutations(6)) {
        CHECK(essential_set(rothe_diagram(w)) == oracle::essential_by_rank(w));
    }
}

TEST_CASE("accessible box and pivots") {
    const Permutation w = parse_permutation("53841267");
    const auto z = accessible_box(permutation_to_code(w));
    REQUIRE(z.has_value());
    CHECK(*z == Cell{3, 7});
    auto piv = pivots(w, *z);
    std::sort(piv.begin(), piv.end());
    CHECK(piv == std::vector<Cell>{{1, 5}, {2, 3}});
    CHECK_FALSE(accessible_box({2, 1}).has_value());
    CHECK_FALSE(accessible_box({}).has_value());
    CHECK(*accessible_box({4, 2, 5, 3}) == Cell{4, 4});
}

TEST_CASE("vexillary test matches 2143 avoidance over S_6") {
    for (const Permutation& w : all_permutations(6)) {
        CHECK(is_vexillary(permutation_to_code(w)) == !oracle::contains_2143(w));
    }
    CHECK_FALSE(is_vexillary(permutation_to_code(parse_permutation("251634"))));
}

TEST_CASE("shape and flag of 6253714") {
    const Code c = permutation_to_code(parse_permutation("6253714"));
    CHECK(c == Code{5, 1, 3, 1, 2});
    const ShapeFlag sf = shape_and_flag(c);
    CHECK(sf.lambda == Partition{5, 3, 2, 1, 1});
    CHECK(sf.phi == std::vector<int>{1, 3, 5, 5, 5});
    CHECK_THROWS_AS(shape_and_flag({4, 2, 5, 2}), InputError);
}

TEST_CASE("132 counts") {
    for (const Permutation& w : all_permutations(5)) CHECK(count_132(w) == brute_132(w));
}

TEST_CASE("grassmannian permutation of a partition") {
    CHECK(permutation_to_code(grassmannian_for({2, 1})) == Code{1, 2});
    CHECK(permutation_to_code(grassmannian_for({3, 3, 1})) == Code{1, 3, 3});
    CHECK(grassmannian_for({}).is_identity());
}

TEST_CASE("rendering") {
    CHECK(render_rothe(Permutation()).empty());
    const std::string art = render_rothe(parse_permutation("53841267"), {true, true});
    CHECK(std::count(art.begin(), art.end(), 'E') == 3);  // (3,7) is drawn as z
    CHECK(std::count(art.begin(), art.end(), 'z') == 1);
}
