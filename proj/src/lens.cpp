#include "esch/lens.hpp"

#include <mpfr.h>

#include <bit>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace esch {

void validate(const LensSpace& L) {
    if (L.p == 0)
        throw std::invalid_argument("lens space: p must be nonzero");
    for (std::int64_t pj : L.params) {
        if (pj == 0)
            throw std::invalid_argument("lens space: parameters must be nonzero");
        if (std::gcd(std::llabs(L.p), std::llabs(pj)) != 1)
            throw std::invalid_argument("lens parameters not coprime to p");
    }
}

namespace {

struct Real {
    mpfr_t x;

    Real() { mpfr_init2(x, 64); }
    explicit Real(mpfr_prec_t prec) { mpfr_init2(x, prec); }
    Real(Real&& o) noexcept {
        mpfr_init2(x, mpfr_get_prec(o.x));
        mpfr_swap(x, o.x);
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(x, o.x);
        return *this;
    }
    Real(const Real&) = delete;
    Real& operator=(const Real&) = delete;
    ~Real() { mpfr_clear(x); }
};

/* One evaluation pass at fixed working precision.
 *
 * Angles are reduced exactly in integer arithmetic before any floating
 * operation: with P = |p|, the j-th factor of term k has angle
 * pi * m / P where m = k*p_j mod 2P.  Splitting m = mu (+P) and folding
 * mu -> nu = min(mu, P - mu) leaves only sin/cos values at pi*nu/P with
 * nu in [0, P/2], where both functions are well conditioned.  Signs:
 *   sin(pi m/P) = s * sin(pi nu/P),   cos(pi m/P) = s * c * cos(pi nu/P)
 * with s = -1 iff m > P and c = -1 iff mu > P/2.  In cot = cos/sin the
 * s cancels; in csc only s survives.
 */
struct Pass {
    std::int64_t P;  // |p|
    mpfr_prec_t prec;
    std::vector<Real> sin_tab, cos_tab;  // values at pi*nu/P, nu = 0..P/2

    Pass(std::int64_t P_, mpfr_prec_t prec_) : P(P_), prec(prec_) {
        std::int64_t half = P / 2;
        sin_tab.reserve(half + 1);
        cos_tab.reserve(half + 1);
        Real pi(prec), angle(prec);
        mpfr_const_pi(pi.x, MPFR_RNDN);
        for (std::int64_t nu = 0; nu <= half; ++nu) {
            mpfr_mul_ui(angle.x, pi.x, static_cast<unsigned long>(nu), MPFR_RNDN);
            mpfr_div_ui(angle.x, angle.x, static_cast<unsigned long>(P), MPFR_RNDN);
            Real s(prec), c(prec);
            mpfr_sin_cos(s.x, c.x, angle.x, MPFR_RNDN);
            sin_tab.push_back(std::move(s));
            cos_tab.push_back(std::move(c));
        }
    }

    // cos(pi*m/P) for m in [0, 2P) as (sign, table index)
    std::pair<int, std::int64_t> cos_at(std::int64_t m) const {
        if (m > P) m = 2 * P - m;
        if (2 * m > P) return {-1, P - m};
        return {1, m};
    }

    void run(const std::array<std::int64_t, 4>& params, mpfr_t T, mpfr_t S, mpfr_t R,
             mpfr_t U) const {
        mpfr_set_zero(T, 1);
        mpfr_set_zero(S, 1);
        mpfr_set_zero(R, 1);
        mpfr_set_zero(U, 1);

        std::int64_t period = 2 * P;
        std::array<std::int64_t, 4> step{}, m{};
        for (int j = 0; j < 4; ++j) {
            step[j] = params[j] % period;
            if (step[j] < 0) step[j] += period;
            m[j] = 0;
        }
        std::int64_t mR = 0, mU = 0;

        Real prod_sin(prec), prod_cos(prec), inv_sin(prec), t1(prec), t2(prec);
        for (std::int64_t k = 1; k < P; ++k) {
            int sign_s = 1, sign_c = 1;
            std::array<std::int64_t, 4> nu{};
            for (int j = 0; j < 4; ++j) {
                m[j] += step[j];
                if (m[j] >= period) m[j] -= period;
                std::int64_t mu = m[j];
                if (mu > P) {
                    mu -= P;
                    sign_s = -sign_s;
                }
                if (2 * mu > P) {
                    nu[j] = P - mu;
                    sign_c = -sign_c;
                } else {
                    nu[j] = mu;
                }
            }
            mR += 2;
            if (mR >= period) mR -= period;
            mU += 4;
            if (mU >= period) mU -= period;

            mpfr_mul(t1.x, sin_tab[nu[0]].x, sin_tab[nu[1]].x, MPFR_RNDN);
            mpfr_mul(t2.x, sin_tab[nu[2]].x, sin_tab[nu[3]].x, MPFR_RNDN);
            mpfr_mul(prod_sin.x, t1.x, t2.x, MPFR_RNDN);
            mpfr_ui_div(inv_sin.x, 1, prod_sin.x, MPFR_RNDN);

            mpfr_mul(t1.x, cos_tab[nu[0]].x, cos_tab[nu[1]].x, MPFR_RNDN);
            mpfr_mul(t2.x, cos_tab[nu[2]].x, cos_tab[nu[3]].x, MPFR_RNDN);
            mpfr_mul(prod_cos.x, t1.x, t2.x, MPFR_RNDN);

            // T += sign_c * prod_cos / prod_sin
            mpfr_mul(t1.x, prod_cos.x, inv_sin.x, MPFR_RNDN);
            if (sign_c > 0)
                mpfr_add(T, T, t1.x, MPFR_RNDN);
            else
                mpfr_sub(T, T, t1.x, MPFR_RNDN);

            // S += sign_s / prod_sin
            if (sign_s > 0)
                mpfr_add(S, S, inv_sin.x, MPFR_RNDN);
            else
                mpfr_sub(S, S, inv_sin.x, MPFR_RNDN);

            auto [cr, ir] = cos_at(mR);
            mpfr_mul(t1.x, cos_tab[ir].x, inv_sin.x, MPFR_RNDN);
            if (sign_s * cr > 0)
                mpfr_add(R, R, t1.x, MPFR_RNDN);
            else
                mpfr_sub(R, R, t1.x, MPFR_RNDN);

            auto [cu, iu] = cos_at(mU);
            mpfr_mul(t1.x, cos_tab[iu].x, inv_sin.x, MPFR_RNDN);
            if (sign_s * cu > 0)
                mpfr_add(U, U, t1.x, MPFR_RNDN);
            else
                mpfr_sub(U, U, t1.x, MPFR_RNDN);
        }
    }
};

/* 45*sum is an integer; the refinement narrows it further depending on
 * gcd(p, 15).  A rounded value that misses integrality or the required
 * divisor means the float pass was not accurate enough (or a bug). */
bool certify_one(mpfr_t sum, std::int64_t required_divisor, Int& out45) {
    mpfr_prec_t prec = mpfr_get_prec(sum);
    Real g(prec), resid(prec);
    mpfr_mul_ui(g.x, sum, 45, MPFR_RNDN);
    mpfr_get_z(out45.get_mpz_t(), g.x, MPFR_RNDN);
    mpfr_sub_z(resid.x, g.x, out45.get_mpz_t(), MPFR_RNDN);
    mpfr_abs(resid.x, resid.x, MPFR_RNDN);
    if (mpfr_cmp_d(resid.x, 0x1p-20) >= 0) return false;
    return out45 % required_divisor == 0;
}

}  // namespace

CertifiedSums trig_sums(const LensSpace& L) {
    validate(L);
    std::int64_t P = std::llabs(L.p);
    if (P == 1) return CertifiedSums{Rat(0), Rat(0), Rat(0), Rat(0)};

    std::int64_t required = 45;
    bool d3 = P % 3 == 0, d5 = P % 5 == 0;
    if (d3 && d5)
        required = 1;
    else if (d3)
        required = 5;
    else if (d5)
        required = 9;

    int log2p = std::bit_width(static_cast<uint64_t>(P));
    mpfr_prec_t prec = 64 + 6 * log2p;
    for (int attempt = 0; attempt <= 4; ++attempt, prec *= 2) {
        Pass pass(P, prec);
        Real T(prec), S(prec), R(prec), U(prec);
        pass.run(L.params, T.x, S.x, R.x, U.x);
        Int t45, s45, r45, u45;
        if (certify_one(T.x, required, t45) && certify_one(S.x, required, s45) &&
            certify_one(R.x, required, r45) && certify_one(U.x, required, u45)) {
            return CertifiedSums{make_rat(t45, 45), make_rat(s45, 45),
                                 make_rat(r45, 45), make_rat(u45, 45)};
        }
    }
    throw std::runtime_error("trig_sums: precision exhausted");
}

QModZ lens_s1(const LensSpace& L) {
    CertifiedSums cs = trig_sums(L);
    return qmodz((cs.T + 14 * cs.S) * make_rat(1, Int(32) * 7 * L.p));
}

static void require_even_sum(const LensSpace& L) {
    std::int64_t sum = L.params[0] + L.params[1] + L.params[2] + L.params[3];
    if (sum % 2 != 0)
        throw std::domain_error("lens invariant: parity violated");
}

QModZ lens_s2(const LensSpace& L) {
    require_even_sum(L);
    CertifiedSums cs = trig_sums(L);
    return qmodz((cs.R - cs.S) * make_rat(1, Int(16) * L.p));
}

QModZ lens_s3(const LensSpace& L) {
    require_even_sum(L);
    CertifiedSums cs = trig_sums(L);
    return qmodz((cs.U - cs.S) * make_rat(1, Int(16) * L.p));
}

}  // namespace esch
