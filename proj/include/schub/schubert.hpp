#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schub/permutations.hpp"
#include "schub/tableaux.hpp"

namespace schub {

// Exponent vectors are stored without trailing zeros.
using Exponent = std::vector<int>;

class MultiPoly {
public:
    MultiPoly() = default;
    static MultiPoly constant(std::int64_t c);
    static MultiPoly monomial(Exponent e, std::int64_t c = 1);
    static MultiPoly variable(int i);  // x_i, 1-based

    const std::map<Exponent, std::int64_t>& terms() const { return terms_; }
    std::int64_t coefficient(const Exponent& e) const;
    bool is_zero() const { return terms_.empty(); }
    int num_vars() const;  // largest index carrying a nonzero exponent
    std::int64_t coefficient_sum() const;

    void add_term(Exponent e, std::int64_t c);
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    bool operator==(const MultiPoly&) const = default;

    // One "coeff e1,...,en" line per term, lexicographic in the exponent.
    std::string serialize(int n = -1) const;

private:
    std::map<Exponent, std::int64_t> terms_;
};

Exponent trim_exponent(Exponent e);

MultiPoly swap_variables(const MultiPoly& f, int i);  // s_i f
// (f - s_i f) / (x_i - x_{i+1}) by exact long division.
MultiPoly divided_difference(const MultiPoly& f, int i);

MultiPoly schubert_divided_diff(const Permutation& w, int n);
MultiPoly schubert_divided_diff(const Permutation& w);
std::int64_t coefficient_oracle(const Permutation& w, const std::vector<int>& alpha);
std::int64_t principal_specialization(const Permutation& w);
std::uint64_t oracle_invocations();

bool nonvanishing(const Code& code, const std::vector<int>& alpha);
std::optional<Tableau> tableau_witness(const Code& code, const std::vector<int>& alpha);

struct TransitionChildren {
    Cell z;
    Code deletion;
    std::vector<std::pair<int, Code>> marches;  // (pivot row, child code), rows increasing
};
TransitionChildren transition_children(const Code& code);

struct TransitionTerm {
    Exponent weight;  // deletion weight, length L of the root code
    Code leaf;
    bool operator==(const TransitionTerm&) const = default;
};
// Depth first, deletion child before march children.
std::vector<TransitionTerm> transition_expand(const Code& code);

MultiPoly complete_homogeneous(int k, int vars);
MultiPoly flagged_schur(const Partition& lambda, const std::vector<int>& phi);

std::int64_t count_coefficient_transition(const Code& code, const std::vector<int>& alpha);

struct TransitionStep {
    enum class Kind { March, Delete };
    Kind kind = Kind::March;
    int row = 0;
    int multiplicity = 1;  // Delete only
    bool operator==(const TransitionStep&) const = default;
};
using TransitionString = std::vector<TransitionStep>;

struct WitnessPair {
    TransitionString steps;
    RowCountMatrix r;
    bool operator==(const WitnessPair&) const = default;
};

std::vector<WitnessPair> enumerate_witnesses(const Code& code, const std::vector<int>& alpha);
bool verify_witness(const WitnessPair& pair, const Code& code, const std::vector<int>& alpha);
std::string format_transition_string(const TransitionString& s);

std::int64_t kostka(const Partition& lambda, const std::vector<int>& alpha);

}  // namespace schub
