#pragma once

#include "esch/arith.hpp"

#include <array>

namespace esch {

/* The lens space L_p(p1,p2,p3,p4) = S^7 / Z_p.
 * p must be nonzero and coprime to each parameter; parameters nonzero. */
struct LensSpace {
    std::int64_t p = 1;
    std::array<std::int64_t, 4> params{1, 1, 1, 1};
};

// Throws std::invalid_argument if p = 0, a parameter is 0, or gcd(p, p_j) != 1.
void validate(const LensSpace& L);

/* Exact values of the four sums over k = 1..|p|-1 of
 *   T: prod_j cot(k pi p_j / p)        S: prod_j csc(k pi p_j / p)
 *   R: cos(2 pi k/|p|) * prod_j csc    U: cos(4 pi k/|p|) * prod_j csc
 * 45*T, 45*S, 45*R, 45*U are always integers; for |p| = 1 all four are 0. */
struct CertifiedSums {
    Rat T, S, R, U;
};

CertifiedSums trig_sums(const LensSpace& L);

// Kreck-Stolz invariants of the lens space:
//   s1 = (T + 14 S) / (2^5 * 7 * p)
//   s2 = (R - S) / (2^4 * p)      s3 = (U - S) / (2^4 * p)
// s2 and s3 require an even parameter sum (throws std::domain_error otherwise).
QModZ lens_s1(const LensSpace& L);
QModZ lens_s2(const LensSpace& L);
QModZ lens_s3(const LensSpace& L);

// Plain double-precision evaluation of the defining sums, used as a test
// oracle against the certified values.  Intended for |p| <= 1e4.
struct ApproxSums {
    double T = 0, S = 0, R = 0, U = 0;
};

ApproxSums oracle_trig_sums(const LensSpace& L);

}  // namespace esch
