#pragma once

#include "esch/arith.hpp"

#include <compare>
#include <tuple>
#include <vector>

namespace esch {

/* Parameters (k | l) of the biquotient E_{k,l}; the two triples must have
 * equal sums. */
struct ParamPair {
    Triple k{};
    Triple l{};

    friend bool operator==(const ParamPair&, const ParamPair&) = default;
};

// Throws std::invalid_argument when the triple sums differ.
ParamPair make_param_pair(const Triple& k, const Triple& l);

// The six pairwise gcd conditions on k_i - l_j that make the action free.
bool is_free(const ParamPair& pp);

/* Positive curvature: every k_i outside [min l, max l], or every l_i
 * outside [min k, max k] (the two sides of the k<->l exchange move). */
bool is_positively_curved(const ParamPair& pp);

enum class OrientationTag { Plus, Minus, Unknown };

/* Unique representative with l3 = 0, k3 = l1 + l2 - k1 - k2 and
 * k1 >= k2 > l1 >= l2 >= 0.  orientation records the effect of the moves
 * used to reach it relative to the input representation: sign changes flip
 * it, entry permutations and the k<->l exchange leave it unknown. */
struct NormalizedSpace {
    ParamPair pp;
    OrientationTag orientation = OrientationTag::Unknown;

    friend bool operator==(const NormalizedSpace& a, const NormalizedSpace& b) {
        return a.pp == b.pp;
    }
    // (k1, k2, l1, l2) determines the space; order lexicographically by it
    friend std::strong_ordering operator<=>(const NormalizedSpace& a,
                                            const NormalizedSpace& b) {
        auto ka = std::tie(a.pp.k[0], a.pp.k[1], a.pp.l[0], a.pp.l[1]);
        auto kb = std::tie(b.pp.k[0], b.pp.k[1], b.pp.l[0], b.pp.l[1]);
        return ka <=> kb;
    }
};

// Requires a free, positively curved input; throws std::domain_error otherwise.
NormalizedSpace normalize(const ParamPair& pp);

// Columns/rows of the matrix A_ij = k_i - l_j whose entries are pairwise
// coprime (1-based indices, ascending).  Condition (C) = either is nonempty.
struct CondC {
    std::vector<int> columns, rows;

    bool holds() const { return !columns.empty() || !rows.empty(); }
};

CondC condition_c(const ParamPair& pp);

enum class Cohomogeneity { One, TwoPlus, TwoMinus, Four };

const char* to_string(Cohomogeneity c);

// Classifies a normalized space by which entries coincide:
// two equal k's and two equal l's -> One; only k's -> TwoPlus;
// only l's -> TwoMinus; otherwise Four.
Cohomogeneity cohomogeneity(const NormalizedSpace& ns);

// a > b > c > 0, pairwise coprime.
struct SasakianTriple {
    std::int64_t a = 0, b = 0, c = 0;

    friend bool operator==(const SasakianTriple&, const SasakianTriple&) = default;
    friend auto operator<=>(const SasakianTriple&, const SasakianTriple&) = default;
};

// k = (a, b, c), l = (a+b+c, 0, 0); free and positively curved by construction.
ParamPair sasakian_to_params(const SasakianTriple& t);

}  // namespace esch
