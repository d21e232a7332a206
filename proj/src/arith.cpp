#include "esch/arith.hpp"

#include <stdexcept>

namespace esch {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0)
        throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_rat: malformed rational '" + text + "'");
    }
}

std::string to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

QModZ qmodz(const Rat& q) {
    // frac = q - floor(q) lies in [0, 1); shift (1/2, 1) down to (-1/2, 0).
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    Rat frac = q - Rat(fl);
    if (frac > make_rat(1, 2))
        frac -= 1;
    QModZ out;
    out.v = frac;
    return out;
}

QModZ operator-(const QModZ& q) { return qmodz(-q.v); }

QModZ operator+(const QModZ& a, const QModZ& b) { return qmodz(a.v + b.v); }

std::string to_string(const QModZ& q) { return to_string(q.v); }

SignedResidue signed_residue(const Int& a, std::int64_t m) {
    if (m < 1 || m % 2 == 0)
        throw std::invalid_argument("signed_residue: modulus must be odd and positive");
    Int r = a % m;            // sign of a
    if (r < 0) r += m;        // now in [0, m)
    if (2 * r > m) r -= m;    // balanced: [-(m-1)/2, (m-1)/2]
    SignedResidue out;
    out.value = static_cast<std::int64_t>(r.get_si());
    out.modulus = m;
    return out;
}

SignedResidue operator-(const SignedResidue& s) {
    SignedResidue out = s;
    out.value = -s.value;
    return out;
}

std::array<Int, 3> sym_polys(const Triple& t) {
    Int a(t[0]), b(t[1]), c(t[2]);
    return {a + b + c, a * b + a * c + b * c, a * b * c};
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m < 1)
        throw std::invalid_argument("mod_inverse: modulus must be positive");
    Int inv, az(a), mz(m);
    if (mpz_invert(inv.get_mpz_t(), az.get_mpz_t(), mz.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: not invertible");
    return static_cast<std::int64_t>(inv.get_si());
}

std::int64_t res1(std::int64_t n, std::int64_t p) {
    if (p < 1)
        throw std::invalid_argument("res1: modulus must be positive");
    std::int64_t m = n % p;
    if (m <= 0) m += p;
    return m;
}

}  // namespace esch
