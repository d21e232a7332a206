#pragma once

#include "esch/spaces.hpp"

#include <vector>

namespace esch {

struct EnumerationRequest {
    enum class Family { General, Sasakian };

    Family family = Family::General;
    std::int64_t r_min = 3;
    std::int64_t r_max = 3;
};

// Throws std::invalid_argument unless r_min, r_max are odd, positive and ordered.
void validate(const EnumerationRequest& req);

/* All positively curved spaces in normal form with |r| = N (N odd),
 * in ascending (k1, k2, l1, l2) order.  Solves
 *   k1 (k1 - l1) + (k2 - l2)(k1 + k2 - l1) = N
 * over k1 >= k2 > l1 >= l2 >= 0 and keeps the free solutions. */
std::vector<NormalizedSpace> enum_positively_curved(std::int64_t N);

// All (a, b, c) with a > b > c > 0 pairwise coprime and ab + ac + bc = r
// (r odd), ascending.
std::vector<SasakianTriple> enum_sasakian(std::int64_t r);

// Range enumerations, ascending by r then lexicographically.
std::vector<NormalizedSpace> enum_range_general(std::int64_t r_min, std::int64_t r_max);
std::vector<SasakianTriple> enum_range_sasakian(std::int64_t r_min, std::int64_t r_max);

std::int64_t sasakian_order(const SasakianTriple& t);

}  // namespace esch
