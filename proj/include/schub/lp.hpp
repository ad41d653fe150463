#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schub/permutations.hpp"

namespace schub {

// GMP rationals are kept canonical by every arithmetic operation.
using Rational = mpq_class;

std::string to_string(const Rational& q);  // "p" or "p/q"

enum class RowKind { LessEq, Equal };

using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column, no zeros

struct FeasibilitySystem {
    int cols = 0;
    std::vector<SparseRow> rows;
    std::vector<Rational> rhs;
    std::vector<RowKind> kinds;
    std::vector<std::string> names;  // one per column

    void add_row(SparseRow row, RowKind kind, Rational b);
    Rational at(int row, int col) const;
    std::vector<std::vector<Rational>> dense() const;
    bool satisfied_by(const std::vector<Rational>& x) const;
};

// "c*name c*name ... <= rhs" per row; "=" for equality rows.
std::string to_lp_text(const FeasibilitySystem& sys);

struct LpResult {
    bool feasible = false;
    std::vector<Rational> point;  // a basic feasible solution when feasible
    long pivots = 0;
};

// Phase-1 bounded-variable simplex over exact rationals; Bland's rule guards
// against cycling on degenerate steps.
LpResult lp_feasible(const FeasibilitySystem& sys);

// Rows in the order (A) 0 <= x, (A) x <= 1, (B) content, (C) flag, with
// variables x[(j-1)n + (i-1)] = alpha_ij.
FeasibilitySystem build_P(const Diagram& d, const std::vector<int>& alpha);
// Same rows with (B) relaxed to "<=", giving the all-inequality form M x <= b.
FeasibilitySystem build_P_inequality_form(const Diagram& d, const std::vector<int>& alpha);

struct LatticePoint {
    int n = 0;
    std::vector<int> coords;  // same order as the variables of build_P
    int at(int i, int j) const { return coords[static_cast<std::size_t>(j - 1) * n + (i - 1)]; }
};

std::optional<LatticePoint> integral_vertex(const FeasibilitySystem& p_system, int n);

struct CompressionData {
    int m = 0;
    std::vector<std::vector<int>> blocks;   // P_k, increasing columns
    std::vector<int> reps;                  // p_k
    std::vector<int> sizes;                 // lambda_k = #P_k
    std::vector<std::vector<int>> row_sets; // R_k, filled when known
};

CompressionData build_compression_rothe(const Code& code);
// Throws InputError unless c is a compression of d.
void validate_compression(const Diagram& d, const CompressionData& c);
CompressionData trivial_compression(const Diagram& d);

FeasibilitySystem build_Q(const Diagram& d, const CompressionData& c, const std::vector<int>& alpha_tilde);
// Uses c.row_sets in place of a diagram.
FeasibilitySystem build_Q(const CompressionData& c, const std::vector<int>& alpha_tilde);

// All square minors in {0,+1,-1}. Rows that are zero, repeat another row up
// to sign, or carry a single +-1 are dropped first; none of these change the
// answer for a {0,+1,-1} matrix.
bool check_total_unimodularity(const std::vector<std::vector<Rational>>& m);
// Reference version without the row reductions.
bool check_total_unimodularity_naive(const std::vector<std::vector<Rational>>& m);

// Alternative rounding: walks a fractional point of P(D,alpha) to an integral
// one by repeated cycle perturbations pushed to the exact maximal step.
std::vector<int> round_by_stable_sequences(const Diagram& d, const std::vector<int>& alpha,
                                           std::vector<Rational> point);

}  // namespace schub
