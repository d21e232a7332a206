#include "esch/lens.hpp"

#include <cmath>
#include <cstdlib>

namespace esch {

/* Deliberately plain: reduce k*p_j by the exact period 2|p| in integers,
 * then sum cot/csc products in doubles.  No folding, no certification;
 * this stays independent of the certified implementation. */
ApproxSums oracle_trig_sums(const LensSpace& L) {
    validate(L);
    const std::int64_t P = std::llabs(L.p);
    ApproxSums out;
    if (P == 1) return out;

    const std::int64_t period = 2 * P;
    for (std::int64_t k = 1; k < P; ++k) {
        double cot_prod = 1.0, csc_prod = 1.0;
        for (std::int64_t pj : L.params) {
            std::int64_t m = static_cast<std::int64_t>(
                (static_cast<__int128>(k) * pj) % period);
            if (m < 0) m += period;
            double x = M_PI * static_cast<double>(m) / static_cast<double>(P);
            double s = std::sin(x);
            cot_prod *= std::cos(x) / s;
            csc_prod *= 1.0 / s;
        }
        out.T += cot_prod;
        out.S += csc_prod;
        out.R += std::cos(2.0 * M_PI * static_cast<double>(k) / static_cast<double>(P)) * csc_prod;
        out.U += std::cos(4.0 * M_PI * static_cast<double>(k) / static_cast<double>(P)) * csc_prod;
    }
    return out;
}

}  // namespace esch
