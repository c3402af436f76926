#include "pretzelpoly/conway.hpp"

#include <cstdlib>

#include "pretzelpoly/errors.hpp"

namespace pretzel {

namespace {

LaurentPoly z_mono(int coeff, int exp) {
    return LaurentPoly::monomial(coeff, exp, Var::Z);
}

}  // namespace

const ConwayBaseCases& ConwayBaseCases::get() {
    static const ConwayBaseCases table{
        /*unknot=*/LaurentPoly::one(Var::Z),
        /*unlink2=*/LaurentPoly::zero(Var::Z),
        /*hopf_right=*/z_mono(1, 1),
        /*hopf_left=*/z_mono(-1, 1),
        /*trefoil=*/LaurentPoly::one(Var::Z) + z_mono(1, 2),
    };
    return table;
}

LaurentPoly conway_closed_p11n(int n) {
    if (n == 0)
        throw InvalidSpecError("P(1,1,0) is not a pretzel link: tangle entries must be nonzero");
    // Both divisions are exact by parity.
    const int z2_coeff = (n % 2 != 0) ? (n + 1) / 2 : -(n / 2);
    return LaurentPoly::one(Var::Z) + z_mono(z2_coeff, 2);
}

LaurentPoly conway_skein_p11n(int n) {
    if (n == 0)
        throw InvalidSpecError("P(1,1,0) is not a pretzel link: tangle entries must be nonzero");

    const auto& base = ConwayBaseCases::get();
    const bool odd = (n % 2) != 0;
    const int step = n > 0 ? 2 : -2;
    const int terminal = (odd ? 1 : 2) * (n > 0 ? 1 : -1);

    LaurentPoly value(Var::Z);
    switch (terminal) {
        case 1: value = base.trefoil; break;
        case 2:
            // P(1,1,2) is the figure-eight knot; the even recursion grounds
            // out one more step down at P(1,1,0), which unwinds to the
            // unknot: 1 - z*z.
            value = base.unknot - z_mono(1, 1) * base.hopf_right;
            break;
        case -1: value = base.unknot; break;  // P(1,1,-1) unwinds to the unknot
        case -2: value = base.trefoil; break;  // P(1,1,-2): same polynomial as the trefoil
        default: break;
    }

    // Each pass from m-step to m switches the top crossing of the length-m
    // tangle: the switched diagram has two fewer half twists, and the
    // smoothed diagram is a Hopf link whose handedness is fixed per family:
    // left for ascending odd, right for ascending even, and mirrored on the
    // negative side.
    const LaurentPoly& hopf = (n > 0) == odd ? base.hopf_left : base.hopf_right;
    const LaurentPoly z = z_mono(1, 1);
    for (int m = terminal + step; (step > 0) ? m <= n : m >= n; m += step)
        value = value - z * hopf;

    return value;
}

}  // namespace pretzel
