#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pretzelpoly/bracket.hpp"
#include "pretzelpoly/verify.hpp"

using namespace pretzel;

namespace {

LaurentPoly a_mono(int c, int e) { return LaurentPoly::monomial(c, e, Var::A); }

const LaurentPoly kGoldenTrefoil = a_mono(1, 7) + a_mono(-1, 3) + a_mono(-1, -5);

// Enumerated by hand over the four states of the two-crossing diagram:
// AA -> A^2 delta, AB/BA -> 1, BB -> A^-2 delta.
const LaurentPoly kHopf = a_mono(-1, 4) + a_mono(-1, -4);

// Frozen during development from the 16-state brute force of P(1,1,2); the
// grouped-by-(p,q) tally gives the same value.
const LaurentPoly kP112 =
    a_mono(1, 8) + a_mono(-1, 4) + a_mono(1, 0) + a_mono(-1, -4) + a_mono(1, -8);

}  // namespace

TEST_CASE("smoothing convention calibration") {
    // These two facts jointly pin the marker convention; the mirrored
    // convention fails both.
    const PretzelSpec spec{{1, 1, 5}};
    CHECK(count_circles(build_diagram(spec), KauffmanState{0}) == 3);
    CHECK(bracket_statesum(PretzelSpec{{1, 1, 1}}).polynomial == kGoldenTrefoil);
}

TEST_CASE("state sum golden values") {
    const auto trefoil = bracket_statesum(PretzelSpec{{1, 1, 1}});
    CHECK(trefoil.polynomial == kGoldenTrefoil);
    CHECK(trefoil.state_count == 8);
    CHECK(trefoil.method == BracketMethod::statesum);
    CHECK(to_text(trefoil.polynomial) == "A^7 - A^3 - A^-5");

    CHECK(bracket_statesum(PretzelSpec{{1, 1}}).polynomial == kHopf);
    CHECK(bracket_statesum(PretzelSpec{{1, 1, 2}}).polynomial == kP112);
}

TEST_CASE("state sum bracket rules") {
    // <O> = 1 and each extra disjoint circle multiplies by delta
    const Diagram unknot({}, {}, 1);
    CHECK(bracket_statesum(unknot).polynomial == LaurentPoly::one(Var::A));
    const Diagram two_circles({}, {}, 2);
    CHECK(bracket_statesum(two_circles).polynomial == bracket_delta());

    const auto trefoil = build_diagram(PretzelSpec{{1, 1, 1}});
    CHECK(bracket_statesum(trefoil.with_free_loops(1)).polynomial ==
          bracket_delta() * kGoldenTrefoil);
}

TEST_CASE("state sum budget") {
    CHECK_THROWS_AS(bracket_statesum(PretzelSpec{{2, 3, 7}}, 8), BudgetError);
    CHECK_THROWS_WITH_AS(bracket_statesum(PretzelSpec{{2, 3, 7}}, 8),
                         doctest::Contains("budget of 8"), BudgetError);
    // the 64-bit state mask is a hard cap regardless of the budget
    CHECK_THROWS_AS(bracket_statesum(PretzelSpec{{32, 33}}, 1000), BudgetError);
}

TEST_CASE("state sum is partition independent") {
    const PretzelSpec spec{{2, 3, 7}};
    const auto serial = bracket_statesum(spec, 24, 1);
    for (unsigned threads : {2u, 3u, 5u, 8u})
        CHECK(bracket_statesum(spec, 24, threads).polynomial == serial.polynomial);
}

TEST_CASE("closed form for P(1,1,n)") {
    SUBCASE("domain") {
        CHECK_THROWS_AS(bracket_closed_p11n(1), PreconditionError);
        CHECK_THROWS_AS(bracket_closed_p11n(0), PreconditionError);
        CHECK_THROWS_AS(bracket_closed_p11n(-3), PreconditionError);
    }

    SUBCASE("equals the state sum") {
        CHECK(bracket_closed_p11n(2).polynomial == kP112);
        for (int n = 2; n <= 9; ++n) {
            const auto closed = bracket_closed_p11n(n);
            CHECK(closed.method == BracketMethod::closed_p11n);
            REQUIRE(closed.polynomial ==
                    bracket_statesum(PretzelSpec{{1, 1, n}}).polynomial);
        }
    }
}

TEST_CASE("closed form for P(1,...,1,n)") {
    SUBCASE("domain") {
        CHECK_THROWS_AS(bracket_closed_general(0, 3), PreconditionError);
        CHECK_THROWS_AS(bracket_closed_general(2, 0), PreconditionError);
        CHECK_THROWS_AS(bracket_closed_general(2, -1), PreconditionError);
    }

    SUBCASE("equals the state sum") {
        CHECK(bracket_closed_general(1, 1).polynomial == kHopf);
        CHECK(bracket_closed_general(2, 3).polynomial ==
              bracket_statesum(PretzelSpec{{1, 1, 3}}).polynomial);
        CHECK(bracket_closed_general(3, 2).polynomial ==
              bracket_statesum(PretzelSpec{{1, 1, 1, 2}}).polynomial);
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 5; ++n) {
                PretzelSpec spec;
                spec.tangles.assign(static_cast<std::size_t>(m), 1);
                spec.tangles.push_back(n);
                REQUIRE(bracket_closed_general(m, n).polynomial ==
                        bracket_statesum(spec).polynomial);
            }
    }

    SUBCASE("agrees with the three-strand form at m = 2") {
        for (int n = 2; n <= 12; ++n)
            REQUIRE(bracket_closed_general(2, n).polynomial ==
                    bracket_closed_p11n(n).polynomial);
    }
}

TEST_CASE("tangle evaluation") {
    CHECK(bracket_tangle_eval(PretzelSpec{{1, 1, 1}}).polynomial == kGoldenTrefoil);
    CHECK(bracket_tangle_eval(PretzelSpec{{1, 1}}).polynomial == kHopf);
    CHECK(bracket_tangle_eval(PretzelSpec{{1, 1, 1}}).method == BracketMethod::tangle);

    CHECK(bracket_tangle_eval(PretzelSpec{{2, 3, 7}}).polynomial ==
          bracket_statesum(PretzelSpec{{2, 3, 7}}).polynomial);
    CHECK(bracket_tangle_eval(PretzelSpec{{-2, 3, 3}}).polynomial ==
          bracket_statesum(PretzelSpec{{-2, 3, 3}}).polynomial);

    std::mt19937_64 rng(0x7a91u);
    for (int i = 0; i < 50; ++i) {
        const auto spec = random_spec(rng, 4, 4);
        CAPTURE(spec.to_string());
        REQUIRE(bracket_tangle_eval(spec).polynomial == bracket_statesum(spec).polynomial);
    }
}

TEST_CASE("mirror symmetry") {
    std::mt19937_64 rng(0x317u);
    for (int i = 0; i < 40; ++i) {
        const auto spec = random_spec(rng, 4, 3);
        CAPTURE(spec.to_string());
        REQUIRE(bracket_statesum(spec.mirrored()).polynomial ==
                substitute_inverse(bracket_statesum(spec).polynomial));
    }
}

TEST_CASE("cyclic rotation invariance") {
    std::mt19937_64 rng(0x98du);
    for (int i = 0; i < 40; ++i) {
        const auto spec = random_spec(rng, 4, 3);
        CAPTURE(spec.to_string());
        REQUIRE(bracket_statesum(spec.rotated()).polynomial ==
                bracket_statesum(spec).polynomial);
    }
}
