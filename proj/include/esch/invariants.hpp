#pragma once

#include "esch/arith.hpp"
#include "esch/lens.hpp"
#include "esch/spaces.hpp"

#include <array>
#include <optional>

namespace esch {

/* Polynomial invariants of a free pair:
 *   r = sigma2(k) - sigma2(l)   (signed; |r| is the order of H^4, always odd)
 *   s = sigma3(k) - sigma3(l) mod |r|, balanced representative
 *   p1 = 2 sigma1(k)^2 - 6 sigma2(k) mod |r|, in [0, |r|-1]
 *   linking = -s^{-1} / r in Q/Z
 */
struct BasicInvariants {
    std::int64_t r_signed = 0;
    std::int64_t r_abs = 0;
    SignedResidue s;
    std::int64_t p1 = 0;
    QModZ linking;
};

// Which coprime line of A_ij = k_i - l_j fed the closed formulas.
enum class CondLine { Col1, Col2, Col3, Row1, Row2, Row3, Fail };

const char* to_string(CondLine line);

struct KSInvariants {
    QModZ s1, s2, s3;
    QModZ s22;  // = 2 |r| s2 in Q/Z
    CondLine source = CondLine::Fail;
};

struct InvariantRecord {
    ParamPair params;        // representation the invariants were evaluated in
    NormalizedSpace normal;  // identity of the underlying space
    BasicInvariants basic;
    std::optional<KSInvariants> ks;  // absent iff condition (C) fails
    Cohomogeneity cohom = Cohomogeneity::Four;

    CondLine cond_line() const { return ks ? ks->source : CondLine::Fail; }
};

// Requires a free pair; throws std::domain_error when r = 0 or the linking
// form is degenerate.
BasicInvariants basic_invariants(const ParamPair& pp);

// q(k,l) for the j-th column (j in {1,2,3}); j' = res1(j+1, 2).
Int q_column(const ParamPair& pp, int j);
Int q_row(const ParamPair& pp, int j);

// The three lens spaces bounding the space alongside E_{k,l} when the
// j-th column (resp. row) of A is pairwise coprime.
std::array<LensSpace, 3> lens_spaces_for_column(const ParamPair& pp, int j);
std::array<LensSpace, 3> lens_spaces_for_row(const ParamPair& pp, int j);

KSInvariants ks_invariants_column(const ParamPair& pp, int j);
KSInvariants ks_invariants_row(const ParamPair& pp, int j);

/* Assembles the full record, computing the Kreck-Stolz invariants through
 * the first pairwise-coprime column, else the first such row.  A pair
 * failing condition (C) yields a record with basic invariants only. */
InvariantRecord full_record(const ParamPair& pp);

// Record with the basic layer only (no Kreck-Stolz evaluation); the ks
// field can be filled later via ensure_ks.
InvariantRecord basic_record(const ParamPair& pp);
void ensure_ks(InvariantRecord& rec);

}  // namespace esch
