#include "esch/classify.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <tuple>

namespace esch {

const char* to_string(Relation r) {
    switch (r) {
        case Relation::None: return "none";
        case Relation::HomotopyEquivalent: return "homotopy";
        case Relation::Homeomorphic: return "homeo";
        case Relation::Diffeomorphic: return "diffeo";
    }
    return "?";
}

const char* to_string(PairOrientation o) {
    return o == PairOrientation::Preserving ? "preserving" : "reversing";
}

namespace {

Relation one_orientation(const InvariantRecord& a, const InvariantRecord& b, bool reversed) {
    SignedResidue sb = reversed ? -b.basic.s : b.basic.s;
    if (!(a.basic.s == sb)) return Relation::None;

    const KSInvariants& ka = *a.ks;
    const KSInvariants& kb = *b.ks;
    QModZ s22b = reversed ? -kb.s22 : kb.s22;
    QModZ s2b = reversed ? -kb.s2 : kb.s2;
    QModZ s1b = reversed ? -kb.s1 : kb.s1;

    bool homotopy = ka.s22 == s22b;
    bool homeo = a.basic.p1 == b.basic.p1 && ka.s2 == s2b;
    if (homeo && !homotopy)
        throw std::logic_error("classify: s2 equality must imply s22 equality");
    if (homeo && ka.s1 == s1b) return Relation::Diffeomorphic;
    if (homeo) return Relation::Homeomorphic;
    if (homotopy) return Relation::HomotopyEquivalent;
    return Relation::None;
}

}  // namespace

PairVerdict compare_records(const InvariantRecord& a, const InvariantRecord& b) {
    PairVerdict v;
    v.s_a = a.basic.s;
    v.s_b = b.basic.s;
    v.p1_a = a.basic.p1;
    v.p1_b = b.basic.p1;

    if (!a.ks || !b.ks) {
        v.classifiable = false;
        return v;
    }
    if (a.basic.r_abs != b.basic.r_abs) return v;

    Relation pres = one_orientation(a, b, false);
    Relation rev = one_orientation(a, b, true);
    if (rev > pres) {
        v.relation = rev;
        v.orientation = PairOrientation::Reversing;
    } else {
        v.relation = pres;
        v.orientation = PairOrientation::Preserving;
    }
    return v;
}

std::int64_t relation_counts(std::vector<InvariantRecord>& records, Relation threshold) {
    if (threshold == Relation::None) {
        std::int64_t n = static_cast<std::int64_t>(records.size());
        return n * (n - 1) / 2;
    }

    // s must match up to sign for every relation; p1 must match from
    // homeomorphism up.  Bucket accordingly before any lens-sum work.
    bool use_p1 = threshold >= Relation::Homeomorphic;
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, std::vector<size_t>> buckets;
    for (size_t i = 0; i < records.size(); ++i) {
        const auto& basic = records[i].basic;
        buckets[{basic.r_abs, std::llabs(basic.s.value), use_p1 ? basic.p1 : 0}].push_back(i);
    }

    std::int64_t count = 0;
    for (auto& [key, members] : buckets) {
        if (members.size() < 2) continue;
        for (size_t i : members) ensure_ks(records[i]);
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = i + 1; j < members.size(); ++j) {
                PairVerdict v = compare_records(records[members[i]], records[members[j]]);
                if (v.classifiable && v.relation >= threshold) ++count;
            }
    }
    return count;
}

}  // namespace esch
