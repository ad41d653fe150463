#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "schub/common.hpp"

namespace schub {

// Lehmer code (c_1,...,c_L), empty for the identity, otherwise c_L > 0.
using Code = std::vector<int>;
using Partition = std::vector<int>;

struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

// One-line notation w(1..m), identity beyond m. Trailing fixed points are
// stripped on construction so equality is equality in S_infinity.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> window);

    int operator()(int i) const;
    int inverse(int value) const;
    int size() const { return static_cast<int>(w_.size()); }
    const std::vector<int>& window() const { return w_; }
    bool is_identity() const { return w_.empty(); }
    std::string str() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> w_;
};

class Diagram {
public:
    Diagram() = default;
    explicit Diagram(int n, std::set<Cell> cells = {});

    int n() const { return n_; }
    const std::set<Cell>& cells() const { return cells_; }
    int size() const { return static_cast<int>(cells_.size()); }
    bool empty() const { return cells_.empty(); }
    bool contains(int row, int col) const { return cells_.count({row, col}) != 0; }
    void insert(Cell c);
    void erase(Cell c) { cells_.erase(c); }

    // Row indices r with (r, col) in D, increasing.
    std::vector<int> column_rows(int col) const;
    std::vector<int> row_counts() const;  // length n

    bool operator==(const Diagram&) const = default;

private:
    int n_ = 0;
    std::set<Cell> cells_;
};

Permutation parse_permutation(const std::string& text);
Code parse_code(const std::string& text);
Partition parse_partition(const std::string& text);
std::string format_vector(const std::vector<int>& v);

// w(1..L) from the code, O(L^2) independent of entry magnitudes.
std::vector<std::int64_t> code_prefix_values(const Code& code);

Permutation code_to_permutation(const Code& code);
Code permutation_to_code(const Permutation& w);
int code_degree(const Code& code);

Diagram rothe_diagram(const Permutation& w, int n);
Diagram rothe_diagram(const Permutation& w);

std::set<Cell> essential_set(const Diagram& d);
Diagram dominant_component(const Diagram& d);

std::optional<Cell> accessible_box(const Code& code);
std::vector<Cell> pivots(const Permutation& w, Cell z);
// Pivot dots of z computed from w(1..L); no accessibility check.
std::vector<Cell> pivot_dots(const std::vector<std::int64_t>& prefix, Cell z);

bool is_vexillary(const Code& code);

struct ShapeFlag {
    Partition lambda;
    std::vector<int> phi;
};
ShapeFlag shape_and_flag(const Code& code);

std::int64_t count_132(const Permutation& w);
Permutation grassmannian_for(const Partition& lambda);

std::vector<Permutation> all_permutations(int n);

struct RenderOptions {
    bool essential = false;
    bool accessible = false;
};
// Rows top to bottom: '□' cell, '•' dot, '-', '|' and '+' for the rays,
// 'E' essential cell, 'z' accessible box, '.' empty.
std::string render_rothe(const Permutation& w, const RenderOptions& opts = {});

}  // namespace schub
