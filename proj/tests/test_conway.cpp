#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pretzelpoly/conway.hpp"
#include "pretzelpoly/errors.hpp"

using namespace pretzel;

namespace {

LaurentPoly z_mono(int c, int e) { return LaurentPoly::monomial(c, e, Var::Z); }

LaurentPoly one_plus(int z2_coeff) {
    return LaurentPoly::one(Var::Z) + z_mono(z2_coeff, 2);
}

}  // namespace

TEST_CASE("base case table") {
    const auto& base = ConwayBaseCases::get();
    CHECK(base.unknot == LaurentPoly::one(Var::Z));
    CHECK(base.unlink2 == LaurentPoly::zero(Var::Z));
    CHECK(base.hopf_right == z_mono(1, 1));
    CHECK(base.hopf_left == z_mono(-1, 1));
    CHECK(base.trefoil == one_plus(1));
}

TEST_CASE("trefoil value composes from the base cases") {
    // expand the trefoil's skein tree by hand: switching one crossing gives
    // the unknot, smoothing gives a Hopf link; one more step resolves the
    // Hopf link into the two-component unlink and the unknot.
    const auto& base = ConwayBaseCases::get();
    const auto z = z_mono(1, 1);
    const auto hopf = base.unlink2 + z * base.unknot;
    CHECK(hopf == base.hopf_right);
    CHECK(base.unknot + z * hopf == base.trefoil);
}

TEST_CASE("closed form values") {
    CHECK(conway_closed_p11n(1) == one_plus(1));
    CHECK(conway_closed_p11n(2) == one_plus(-1));
    CHECK(conway_closed_p11n(3) == one_plus(2));
    CHECK(conway_closed_p11n(4) == one_plus(-2));
    CHECK(conway_closed_p11n(-1) == LaurentPoly::one(Var::Z));
    CHECK(conway_closed_p11n(-2) == one_plus(1));
    CHECK(to_text(conway_closed_p11n(2)) == "1 - z^2");
    CHECK_THROWS_AS(conway_closed_p11n(0), InvalidSpecError);
}

TEST_CASE("skein recursion values") {
    CHECK(conway_skein_p11n(1) == one_plus(1));
    CHECK(conway_skein_p11n(2) == one_plus(-1));
    CHECK(conway_skein_p11n(3) == one_plus(2));
    CHECK(conway_skein_p11n(4) == one_plus(-2));
    CHECK_THROWS_AS(conway_skein_p11n(0), InvalidSpecError);

    // the negative terminal values follow the closed form rather than an
    // independent computation; everything past them is recursion
    CHECK(conway_skein_p11n(-1) == conway_closed_p11n(-1));
    CHECK(conway_skein_p11n(-2) == conway_closed_p11n(-2));
}

TEST_CASE("closed form equals skein recursion for n in -15..15") {
    for (int n = -15; n <= 15; ++n) {
        if (n == 0)
            continue;
        CAPTURE(n);
        REQUIRE(conway_closed_p11n(n) == conway_skein_p11n(n));
    }
}

TEST_CASE("degree and parity structure") {
    for (int n = -20; n <= 20; ++n) {
        if (n == 0)
            continue;
        const auto p = conway_closed_p11n(n);
        CAPTURE(n);
        REQUIRE(p.max_exponent() <= 2);
        REQUIRE(p.coeff(0) == 1);
        REQUIRE(p.coeff(1) == 0);
        const BigInt expected = (n % 2 != 0) ? BigInt((n + 1) / 2) : BigInt(-(n / 2));
        REQUIRE(p.coeff(2) == expected);
    }
}
