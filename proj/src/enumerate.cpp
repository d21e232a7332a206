#include "esch/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace esch {

void validate(const EnumerationRequest& req) {
    if (req.r_min < 1 || req.r_max < req.r_min)
        throw std::invalid_argument("enumeration range: need 1 <= r_min <= r_max");
    if (req.r_min % 2 == 0 || req.r_max % 2 == 0)
        throw std::invalid_argument("enumeration range: bounds must be odd");
}

std::vector<NormalizedSpace> enum_positively_curved(std::int64_t N) {
    if (N < 1 || N % 2 == 0)
        throw std::invalid_argument("enum_positively_curved: N must be odd and positive");

    std::vector<NormalizedSpace> out;
    for (std::int64_t k1 = 1; k1 < N; ++k1) {
        // head = k1*(k1 - l1) <= N-1 bounds l1 from below
        std::int64_t l1_min = std::max<std::int64_t>(0, k1 - (N - 1) / k1);
        for (std::int64_t l1 = l1_min; l1 < k1; ++l1) {
            std::int64_t head = k1 * (k1 - l1);
            if (head > N - 1) continue;
            std::int64_t M = N - head;
            for (std::int64_t k2 = l1 + 1; k2 <= k1; ++k2) {
                std::int64_t D = k1 + k2 - l1;
                if (M % D != 0) continue;
                std::int64_t l2 = k2 - M / D;
                if (l2 < 0 || l2 > l1) continue;
                Triple k{k1, k2, l1 + l2 - k1 - k2};
                Triple l{l1, l2, 0};
                ParamPair pp{k, l};
                if (!is_free(pp)) continue;

                NormalizedSpace ns;
                ns.pp = pp;
                ns.orientation = OrientationTag::Plus;
                auto s2k = k[0] * k[1] + k[0] * k[2] + k[1] * k[2];
                auto s2l = l[0] * l[1];
                if (s2k - s2l != -N)
                    throw std::logic_error("enumeration: |r| mismatch");
                out.push_back(ns);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SasakianTriple> enum_sasakian(std::int64_t r) {
    if (r < 1 || r % 2 == 0)
        throw std::invalid_argument("enum_sasakian: r must be odd and positive");

    std::vector<SasakianTriple> out;
    for (std::int64_t c = 1; 3 * c * c < r; ++c) {
        for (std::int64_t b = c + 1; b * c + (b + c) * (b + 1) <= r; ++b) {
            std::int64_t rem = r - b * c;
            if (rem % (b + c) != 0) continue;
            std::int64_t a = rem / (b + c);
            if (a <= b) continue;
            if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
            out.push_back({a, b, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NormalizedSpace> enum_range_general(std::int64_t r_min, std::int64_t r_max) {
    validate({EnumerationRequest::Family::General, r_min, r_max});
    std::vector<NormalizedSpace> out;
    for (std::int64_t r = r_min; r <= r_max; r += 2) {
        auto block = enum_positively_curved(r);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::int64_t sasakian_order(const SasakianTriple& t) {
    return t.a * t.b + t.a * t.c + t.b * t.c;
}

/* Range form: iterate (c, b, a) directly and bucket by the resulting order,
 * rather than solving per r.  Output matches per-r enumeration. */
std::vector<SasakianTriple> enum_range_sasakian(std::int64_t r_min, std::int64_t r_max) {
    validate({EnumerationRequest::Family::Sasakian, r_min, r_max});
    std::vector<SasakianTriple> out;
    for (std::int64_t c = 1; 3 * c * c < r_max; ++c) {
        for (std::int64_t b = c + 1; b * c + (b + c) * (b + 1) <= r_max; ++b) {
            if (std::gcd(b, c) != 1) continue;
            std::int64_t a0 = b + 1;
            // raise a0 so that the order reaches r_min
            std::int64_t lo = r_min - b * c;
            if (lo > 0) {
                std::int64_t need = (lo + b + c - 1) / (b + c);
                a0 = std::max(a0, need);
            }
            for (std::int64_t a = a0; b * c + a * (b + c) <= r_max; ++a) {
                std::int64_t r = b * c + a * (b + c);
                if (r % 2 == 0) continue;
                if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1) continue;
                out.push_back({a, b, c});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const SasakianTriple& x, const SasakianTriple& y) {
        std::int64_t rx = sasakian_order(x), ry = sasakian_order(y);
        return rx != ry ? rx < ry : std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    return out;
}

}  // namespace esch
