#pragma once

#include "pretzelpoly/laurent.hpp"

namespace pretzel {

/// Terminal values of the skein recursion, in the variable z.
struct ConwayBaseCases {
    LaurentPoly unknot;       // 1
    LaurentPoly unlink2;      // 0 (split two-component unlink)
    LaurentPoly hopf_right;   // z
    LaurentPoly hopf_left;    // -z
    LaurentPoly trefoil;      // 1 + z^2, the knot P(1,1,1)

    static const ConwayBaseCases& get();
};

/// Closed form for the Conway polynomial of P(1,1,n), n != 0:
/// 1 + ((n+1)/2) z^2 for odd n, 1 - (n/2) z^2 for even n.
LaurentPoly conway_closed_p11n(int n);

/// Same value by skein recursion: switching the top crossing of the length-n
/// tangle undoes two half twists, so the value descends two steps of n at a
/// time, paying z times a Hopf-link polynomial per step, until a terminal
/// case is reached. Independent of conway_closed_p11n except for the
/// terminal values at n = -1 and n = -2.
LaurentPoly conway_skein_p11n(int n);

}  // namespace pretzel
