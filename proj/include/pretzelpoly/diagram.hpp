#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pretzelpoly/errors.hpp"

namespace pretzel {

/// Integer tuple (p_1,...,p_k) defining a pretzel link. Column i carries
/// |p_i| crossings of sign sgn(p_i); every entry must be nonzero.
struct PretzelSpec {
    std::vector<int> tangles;

    /// Parses a comma-separated list of integers, e.g. "1,1,-4".
    static PretzelSpec parse(std::string_view text);

    void validate() const;  // throws InvalidSpecError
    int columns() const { return static_cast<int>(tangles.size()); }
    int crossing_count() const;

    PretzelSpec mirrored() const;  // (-p_1,...,-p_k)
    PretzelSpec rotated() const;   // (p_2,...,p_k,p_1)
    std::string to_string() const;

    bool operator==(const PretzelSpec&) const = default;
};

struct Crossing {
    int column;  // 0-based column index
    int row;     // 0-based position within the column, top to bottom
    int sign;    // +1 or -1
};

// Port layout: port id = 4*crossing + offset.
inline constexpr int kPortTL = 0;
inline constexpr int kPortTR = 1;
inline constexpr int kPortBL = 2;
inline constexpr int kPortBR = 3;

/// Assignment of a marker to every crossing: bit i set means crossing i
/// carries a B marker, clear means A.
struct KauffmanState {
    std::uint64_t mask = 0;

    bool is_b(int crossing) const { return (mask >> crossing) & 1u; }
};

/// Marker string in crossing-index order, e.g. "ABA".
std::string state_to_string(const KauffmanState& s, int crossing_count);

/// A 4-valent link diagram given as a crossing list plus a perfect pairing
/// of the crossing ports into arcs. `free_loops` counts extra crossing-free
/// circles drawn disjointly from the rest of the diagram.
///
/// Pretzel standard form (from_spec): within a column, BL/BR of each
/// crossing join TL/TR of the crossing below; the closure joins TR of each
/// column's top crossing to TL of the next column's top crossing,
/// cyclically, and likewise BR to BL along the bottom.
///
/// Smoothing convention: on a positive crossing the A marker joins TL-BL
/// and TR-BR (strands pass through vertically) and the B marker joins
/// TL-TR and BL-BR; on a negative crossing the pairings swap. The
/// orientation of this convention is pinned by two facts locked in the
/// calibration tests: the all-A state of P(1,1,n) smooths to three
/// circles, and <P(1,1,1)> = A^7 - A^3 - A^-5.
class Diagram {
public:
    Diagram() = default;
    Diagram(std::vector<Crossing> crossings,
            std::vector<std::pair<std::uint16_t, std::uint16_t>> arcs,
            int free_loops = 0);

    static Diagram from_spec(const PretzelSpec& spec);

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<std::pair<std::uint16_t, std::uint16_t>>& arcs() const { return arcs_; }
    int free_loops() const { return free_loops_; }
    Diagram with_free_loops(int extra) const;

    /// Port pairs produced by smoothing crossing i under the given marker.
    /// Layout: [0..3] = A-marker pairs (p0,p1),(p2,p3); [4..7] = B-marker.
    const std::array<std::uint16_t, 8>& smoothing(int crossing) const {
        return smoothings_[static_cast<std::size_t>(crossing)];
    }

private:
    void finish_build();

    std::vector<Crossing> crossings_;
    std::vector<std::pair<std::uint16_t, std::uint16_t>> arcs_;
    std::vector<std::array<std::uint16_t, 8>> smoothings_;
    int free_loops_ = 0;
};

/// Builds the standard-form diagram of a pretzel spec.
Diagram build_diagram(const PretzelSpec& spec);

/// Number of circles obtained by smoothing every crossing according to the
/// state's markers (free loops included). Union-find over the port graph.
int count_circles(const Diagram& d, const KauffmanState& s);

/// Summary of a state used by the circle-count predictors: the B-marker
/// census for P(1,1,n) and the (p,q) counts for P(1,...,1,n) with m
/// single-crossing tangles.
struct StateClassification {
    int b_total = 0;    // total B markers
    bool b_on_v1 = false;  // B on the column-1 crossing
    bool b_on_v2 = false;  // B on the column-2 crossing (meaningful when m >= 2)
    int p = 0;          // A markers among the m single-crossing tangles
    int q = 0;          // B markers in the length-n tangle
};

/// Extracts the classification of a state of P(1,...,1,n); the spec must
/// have m >= 1 leading entries equal to 1 followed by one positive entry.
StateClassification classify_state(const PretzelSpec& spec, const KauffmanState& s);

/// Predicted circle count for a state of P(1,1,n), n > 1:
/// 3 when no B marker, 2 when exactly one, |B|-1 when v1 or v2 carries a B,
/// |B|+1 otherwise.
int classify_state_p11n(const PretzelSpec& spec, const KauffmanState& s);

/// Predicted circle count for a state of P(1,...,1,n) from the counts
/// (p, q): p+q-1 when both positive, p+1 when q=0<p, q+1 when p=0<q,
/// 1 when both zero.
int classify_state_general(int m, int n, int p, int q);

}  // namespace pretzel
