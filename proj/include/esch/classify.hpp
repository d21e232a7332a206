#pragma once

#include "esch/invariants.hpp"

#include <vector>

namespace esch {

enum class Relation { None = 0, HomotopyEquivalent = 1, Homeomorphic = 2, Diffeomorphic = 3 };
enum class PairOrientation { Preserving, Reversing };

const char* to_string(Relation r);
const char* to_string(PairOrientation o);

struct PairVerdict {
    Relation relation = Relation::None;
    PairOrientation orientation = PairOrientation::Preserving;
    bool classifiable = true;  // false when either side lacks condition (C)

    // the compared tuples, as evaluated
    SignedResidue s_a, s_b;
    std::int64_t p1_a = 0, p1_b = 0;
};

/* Orientation-preserving tests, all requiring |r| equal and s_a = s_b:
 *   homotopy equivalent:  s22 equal
 *   homeomorphic:         p1 and s2 equal
 *   diffeomorphic:        additionally s1 equal
 * Orientation-reversing: the same with s, s1, s2, s22 of B negated
 * (p1 unchanged).  The reported relation is the strongest that holds;
 * a tie between orientations reports Preserving. */
PairVerdict compare_records(const InvariantRecord& a, const InvariantRecord& b);

/* Number of unordered pairs of distinct records related by at least the
 * given relation in either orientation.  Kreck-Stolz invariants are filled
 * in lazily for records that share a candidate bucket. */
std::int64_t relation_counts(std::vector<InvariantRecord>& records, Relation threshold);

}  // namespace esch
