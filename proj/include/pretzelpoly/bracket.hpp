#pragma once

#include <cstdint>
#include <string_view>

#include "pretzelpoly/diagram.hpp"
#include "pretzelpoly/laurent.hpp"

namespace pretzel {

// State masks are 64-bit, so brute-force enumeration is hard-capped at 63
// crossings; the configurable budget keeps the 2^c blowup in check well
// before that.
inline constexpr int kDefaultCrossingBudget = 24;
inline constexpr int kMaxEnumerableCrossings = 63;

enum class BracketMethod { statesum, closed_p11n, closed_general, tangle };

std::string_view method_name(BracketMethod m);

struct BracketResult {
    LaurentPoly polynomial{Var::A};
    BracketMethod method = BracketMethod::statesum;
    std::uint64_t state_count = 0;  // populated by statesum only
};

/// The loop value -A^2 - A^-2 contributed per extra circle.
LaurentPoly bracket_delta();

/// Exhaustive state sum: every one of the 2^c marker assignments is
/// smoothed, its circles counted, and A^{|A|-|B|} delta^{|circles|-1}
/// accumulated. `threads` = 0 picks a worker count automatically; any
/// partition of the state space gives the identical exact result.
BracketResult bracket_statesum(const Diagram& d,
                               int max_crossings = kDefaultCrossingBudget,
                               unsigned threads = 0);
BracketResult bracket_statesum(const PretzelSpec& spec,
                               int max_crossings = kDefaultCrossingBudget,
                               unsigned threads = 0);

/// Closed form for <P(1,1,n)>, defined for integers n >= 2.
BracketResult bracket_closed_p11n(int n);

/// Closed form for <P(1,...,1,n)> with m single-crossing tangles followed by
/// one tangle of n crossings; defined for m >= 1, n >= 1.
BracketResult bracket_closed_general(int m, int n);

/// Fast path: reduces each column to coefficients over the two basis
/// 2-tangles and evaluates the pretzel closure. Linear in the crossing
/// count, no state enumeration.
BracketResult bracket_tangle_eval(const PretzelSpec& spec);

}  // namespace pretzel
