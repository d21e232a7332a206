#include "esch/spaces.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace esch {

ParamPair make_param_pair(const Triple& k, const Triple& l) {
    if (k[0] + k[1] + k[2] != l[0] + l[1] + l[2])
        throw std::invalid_argument("param pair: triple sums differ");
    return ParamPair{k, l};
}

bool is_free(const ParamPair& pp) {
    const auto& k = pp.k;
    const auto& l = pp.l;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == b) continue;
            if (std::gcd(k[0] - l[a], k[1] - l[b]) != 1) return false;
        }
    return true;
}

namespace {

bool entries_outside(const Triple& t, const Triple& range) {
    std::int64_t lo = std::min({range[0], range[1], range[2]});
    std::int64_t hi = std::max({range[0], range[1], range[2]});
    for (std::int64_t v : t)
        if (lo <= v && v <= hi) return false;
    return true;
}

}  // namespace

bool is_positively_curved(const ParamPair& pp) {
    return entries_outside(pp.k, pp.l) || entries_outside(pp.l, pp.k);
}

NormalizedSpace normalize(const ParamPair& pp) {
    if (!is_free(pp))
        throw std::domain_error("normalize: pair is not free");

    Triple k = pp.k, l = pp.l;
    bool swapped = false;
    if (!entries_outside(k, l)) {
        if (!entries_outside(l, k))
            throw std::domain_error("normalize: pair is not positively curved");
        std::swap(k, l);
        swapped = true;
    }

    // Exactly two k's lie on one side of [min l, max l] and one on the
    // other (equal sums force a split); put the two on the right.
    std::int64_t hi = std::max({l[0], l[1], l[2]});
    int right = static_cast<int>(std::count_if(k.begin(), k.end(),
                                               [&](std::int64_t v) { return v > hi; }));
    bool negated = false;
    if (right == 1) {
        for (auto& v : k) v = -v;
        for (auto& v : l) v = -v;
        negated = true;
    }

    Triple k_sorted = k, l_sorted = l;
    std::sort(k_sorted.begin(), k_sorted.end(), std::greater<>());
    std::sort(l_sorted.begin(), l_sorted.end(), std::greater<>());
    bool permuted = (k_sorted != k) || (l_sorted != l);

    std::int64_t shift = l_sorted[2];
    for (auto& v : k_sorted) v -= shift;
    for (auto& v : l_sorted) v -= shift;

    if (!(k_sorted[0] >= k_sorted[1] && k_sorted[1] > l_sorted[0] &&
          l_sorted[0] >= l_sorted[1] && l_sorted[1] >= 0 && l_sorted[2] == 0 &&
          k_sorted[2] < 0))
        throw std::domain_error("normalize: pair is not positively curved");

    NormalizedSpace ns;
    ns.pp = ParamPair{k_sorted, l_sorted};
    if (swapped || permuted)
        ns.orientation = OrientationTag::Unknown;
    else
        ns.orientation = negated ? OrientationTag::Minus : OrientationTag::Plus;
    return ns;
}

CondC condition_c(const ParamPair& pp) {
    const auto& k = pp.k;
    const auto& l = pp.l;
    auto coprime3 = [](std::int64_t a, std::int64_t b, std::int64_t c) {
        return std::gcd(a, b) == 1 && std::gcd(a, c) == 1 && std::gcd(b, c) == 1;
    };
    CondC out;
    for (int j = 0; j < 3; ++j)
        if (coprime3(k[0] - l[j], k[1] - l[j], k[2] - l[j]))
            out.columns.push_back(j + 1);
    for (int i = 0; i < 3; ++i)
        if (coprime3(k[i] - l[0], k[i] - l[1], k[i] - l[2]))
            out.rows.push_back(i + 1);
    return out;
}

const char* to_string(Cohomogeneity c) {
    switch (c) {
        case Cohomogeneity::One: return "1";
        case Cohomogeneity::TwoPlus: return "2+";
        case Cohomogeneity::TwoMinus: return "2-";
        case Cohomogeneity::Four: return "4";
    }
    return "?";
}

Cohomogeneity cohomogeneity(const NormalizedSpace& ns) {
    const auto& k = ns.pp.k;
    const auto& l = ns.pp.l;
    bool k_eq = k[0] == k[1] || k[1] == k[2] || k[0] == k[2];
    bool l_eq = l[0] == l[1] || l[1] == l[2] || l[0] == l[2];
    if (k_eq && l_eq) return Cohomogeneity::One;
    if (k_eq) return Cohomogeneity::TwoPlus;
    if (l_eq) return Cohomogeneity::TwoMinus;
    return Cohomogeneity::Four;
}

ParamPair sasakian_to_params(const SasakianTriple& t) {
    if (!(t.a > t.b && t.b > t.c && t.c > 0))
        throw std::invalid_argument("sasakian triple: need a > b > c > 0");
    if (std::gcd(t.a, t.b) != 1 || std::gcd(t.a, t.c) != 1 || std::gcd(t.b, t.c) != 1)
        throw std::invalid_argument("sasakian triple: entries must be pairwise coprime");
    return make_param_pair({t.a, t.b, t.c}, {t.a + t.b + t.c, 0, 0});
}

}  // namespace esch
