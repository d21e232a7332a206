#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>

namespace esch {

using Int = mpz_class;
using Rat = mpq_class;
using Triple = std::array<std::int64_t, 3>;

// Canonical rational num/den in lowest terms, den > 0.  den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

// Parse "num/den" or "num".  Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& text);

std::string to_string(const Rat& q);

/* A class in Q/Z, stored as the unique representative in (-1/2, 1/2].
 * Equality of classes is exact rational equality of representatives. */
struct QModZ {
    Rat v;

    QModZ() : v(0) {}
    friend bool operator==(const QModZ&, const QModZ&) = default;
};

QModZ qmodz(const Rat& q);
QModZ operator-(const QModZ& q);
QModZ operator+(const QModZ& a, const QModZ& b);
std::string to_string(const QModZ& q);

/* Residue class mod an odd m >= 1, stored as the balanced representative
 * with -(m-1)/2 <= value <= (m-1)/2.  Negation stays inside the interval. */
struct SignedResidue {
    std::int64_t value = 0;
    std::int64_t modulus = 1;

    friend bool operator==(const SignedResidue&, const SignedResidue&) = default;
};

SignedResidue signed_residue(const Int& a, std::int64_t m);
SignedResidue operator-(const SignedResidue& s);

// Elementary symmetric polynomials (sigma1, sigma2, sigma3) of a triple.
std::array<Int, 3> sym_polys(const Triple& t);

// Multiplicative inverse of a mod m; requires gcd(a, m) = 1, m >= 1.
// Result lies in [1, m-1] for m > 1 (and is 0 for m = 1).
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

// Representative of n mod p in {1, ..., p}; multiples of p map to p, not 0.
std::int64_t res1(std::int64_t n, std::int64_t p);

}  // namespace esch
