#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "schub/permutations.hpp"

namespace schub {

inline constexpr int kUnlabeled = 0;

// A map from the cells of a diagram to [n] or kUnlabeled.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(Diagram shape);  // every cell unlabeled
    Tableau(Diagram shape, std::map<Cell, int> labels);

    const Diagram& shape() const { return shape_; }
    const std::map<Cell, int>& labels() const { return labels_; }
    int at(Cell c) const;
    void set(Cell c, int label);

    bool operator==(const Tableau&) const = default;

private:
    Diagram shape_;
    std::map<Cell, int> labels_;
};

// Row-set membership over [n]; bit r-1 stands for row r.
struct SubsetS {
    std::uint32_t bits = 0;
    bool contains(int r) const { return r >= 1 && r <= 32 && ((bits >> (r - 1)) & 1u); }
    static SubsetS of(std::initializer_list<int> rows);
};

bool is_flagged(const Tableau& t);
bool is_column_injective(const Tableau& t);
bool is_perfect(const Tableau& t);
// Labelled entries strictly increase down each column.
bool is_column_strict(const Tableau& t);

std::vector<int> content(const Tableau& t);  // length n, counts of labels 1..n
int count_in(const Tableau& t, SubsetS s);    // #tau^{-1}(S)
bool exhausts(const Tableau& t, const std::vector<int>& alpha, SubsetS s);

// Deterministic order: cells by (col,row), labels ascending with the
// unlabeled option last. Alpha, when given, filters by content (padded to n).
std::vector<Tableau> enumerate_fcitab(const Diagram& d, const std::optional<std::vector<int>>& alpha = std::nullopt);
std::vector<Tableau> enumerate_perfect(const Diagram& d, const std::optional<std::vector<int>>& alpha = std::nullopt);
std::vector<Tableau> enumerate_column_strict(const Diagram& d, const std::optional<std::vector<int>>& alpha = std::nullopt);

// Flat 0/1 point in the column-major order x[(j-1)n + (i-1)] = alpha_ij.
std::vector<int> tableau_to_point(const Tableau& t);
Tableau tableau_from_integral_point(const Diagram& d, const std::vector<int>& point);

struct FlaggedSSYT {
    Partition shape;
    std::vector<std::vector<int>> rows;
    std::vector<int> flag;
    bool operator==(const FlaggedSSYT&) const = default;
};

std::vector<FlaggedSSYT> enumerate_flagged_ssyt(const Partition& lambda, const std::vector<int>& phi,
                                                const std::optional<std::vector<int>>& content = std::nullopt);
// Same count as enumerate_flagged_ssyt(...).size() without materializing.
std::int64_t count_flagged_ssyt(const Partition& lambda, const std::vector<int>& phi, const std::vector<int>& content);
std::vector<int> ssyt_content(const FlaggedSSYT& t, int length);

using RowCountMatrix = std::vector<std::vector<int>>;

RowCountMatrix row_count_matrix(const std::vector<std::vector<int>>& rows, int side);
bool validate_row_count_matrix(const RowCountMatrix& r, const Partition& lambda, const std::vector<int>& phi);
// The unique row-weakly-increasing filling with r[i][j] copies of j+1 in row i+1.
std::vector<std::vector<int>> decode_row_count_matrix(const RowCountMatrix& r);

std::string render_tableau(const Tableau& t);

}  // namespace schub
