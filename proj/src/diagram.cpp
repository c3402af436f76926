#include "pretzelpoly/diagram.hpp"

#include <bit>
#include <charconv>
#include <cstdlib>
#include <numeric>

namespace pretzel {

PretzelSpec PretzelSpec::parse(std::string_view text) {
    PretzelSpec spec;
    if (text.empty())
        throw InvalidSpecError("pretzel spec is empty");
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw InvalidSpecError("bad tangle entry '" + std::string(token) +
                                   "': expected a nonzero integer");
        spec.tangles.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    spec.validate();
    return spec;
}

void PretzelSpec::validate() const {
    if (tangles.empty())
        throw InvalidSpecError("pretzel spec needs at least one tangle");
    for (int p : tangles)
        if (p == 0)
            throw InvalidSpecError("tangle entries must be nonzero");
}

int PretzelSpec::crossing_count() const {
    int total = 0;
    for (int p : tangles)
        total += std::abs(p);
    return total;
}

PretzelSpec PretzelSpec::mirrored() const {
    PretzelSpec out;
    out.tangles.reserve(tangles.size());
    for (int p : tangles)
        out.tangles.push_back(-p);
    return out;
}

PretzelSpec PretzelSpec::rotated() const {
    PretzelSpec out;
    if (tangles.empty())
        return out;
    out.tangles.assign(tangles.begin() + 1, tangles.end());
    out.tangles.push_back(tangles.front());
    return out;
}

std::string PretzelSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < tangles.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(tangles[i]);
    }
    return out;
}

std::string state_to_string(const KauffmanState& s, int crossing_count) {
    std::string out(static_cast<std::size_t>(crossing_count), 'A');
    for (int i = 0; i < crossing_count; ++i)
        if (s.is_b(i))
            out[static_cast<std::size_t>(i)] = 'B';
    return out;
}

Diagram::Diagram(std::vector<Crossing> crossings,
                 std::vector<std::pair<std::uint16_t, std::uint16_t>> arcs,
                 int free_loops)
    : crossings_(std::move(crossings)), arcs_(std::move(arcs)), free_loops_(free_loops) {
    if (free_loops_ < 0)
        throw InvalidSpecError("free loop count must be nonnegative");
    finish_build();
}

void Diagram::finish_build() {
    if (crossings_.size() > 63)
        throw InvalidSpecError("diagrams are limited to 63 crossings (states are 64-bit masks)");
    const std::size_t ports = 4 * crossings_.size();
    std::vector<int> degree(ports, 0);
    for (auto [a, b] : arcs_) {
        if (a >= ports || b >= ports)
            throw InvalidSpecError("wiring arc references a port outside the diagram");
        ++degree[a];
        ++degree[b];
    }
    for (int d : degree)
        if (d != 1)
            throw InvalidSpecError("wiring must pair every port exactly once");

    smoothings_.clear();
    smoothings_.reserve(crossings_.size());
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        const auto base = static_cast<std::uint16_t>(4 * i);
        const std::uint16_t tl = base + kPortTL, tr = base + kPortTR,
                            bl = base + kPortBL, br = base + kPortBR;
        // vertical pairing (TL-BL, TR-BR) and horizontal pairing (TL-TR, BL-BR)
        const std::array<std::uint16_t, 4> vertical{tl, bl, tr, br};
        const std::array<std::uint16_t, 4> horizontal{tl, tr, bl, br};
        std::array<std::uint16_t, 8> entry{};
        const bool a_is_vertical = crossings_[i].sign > 0;
        const auto& a_pairs = a_is_vertical ? vertical : horizontal;
        const auto& b_pairs = a_is_vertical ? horizontal : vertical;
        for (int j = 0; j < 4; ++j) {
            entry[static_cast<std::size_t>(j)] = a_pairs[static_cast<std::size_t>(j)];
            entry[static_cast<std::size_t>(j + 4)] = b_pairs[static_cast<std::size_t>(j)];
        }
        smoothings_.push_back(entry);
    }
}

Diagram Diagram::from_spec(const PretzelSpec& spec) {
    spec.validate();
    Diagram d;
    std::vector<std::pair<std::uint16_t, std::uint16_t>> col_top;  // (TL, TR) of top crossing
    std::vector<std::pair<std::uint16_t, std::uint16_t>> col_bot;  // (BL, BR) of bottom crossing

    std::uint16_t index = 0;
    for (int col = 0; col < spec.columns(); ++col) {
        const int p = spec.tangles[static_cast<std::size_t>(col)];
        const int sign = p > 0 ? 1 : -1;
        const int height = std::abs(p);
        const std::uint16_t first = index;
        for (int row = 0; row < height; ++row) {
            d.crossings_.push_back({col, row, sign});
            if (row > 0) {
                const std::uint16_t above = static_cast<std::uint16_t>(4 * (index - 1));
                const std::uint16_t here = static_cast<std::uint16_t>(4 * index);
                d.arcs_.emplace_back(above + kPortBL, here + kPortTL);
                d.arcs_.emplace_back(above + kPortBR, here + kPortTR);
            }
            ++index;
        }
        const std::uint16_t last = static_cast<std::uint16_t>(index - 1);
        col_top.emplace_back(4 * first + kPortTL, 4 * first + kPortTR);
        col_bot.emplace_back(4 * last + kPortBL, 4 * last + kPortBR);
    }

    const std::size_t k = col_top.size();
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = (i + 1) % k;
        d.arcs_.emplace_back(col_top[i].second, col_top[j].first);
        d.arcs_.emplace_back(col_bot[i].second, col_bot[j].first);
    }

    d.finish_build();
    return d;
}

Diagram Diagram::with_free_loops(int extra) const {
    Diagram d = *this;
    if (extra < 0 || free_loops_ + extra < 0)
        throw InvalidSpecError("free loop count must be nonnegative");
    d.free_loops_ += extra;
    return d;
}

Diagram build_diagram(const PretzelSpec& spec) {
    return Diagram::from_spec(spec);
}

namespace {

// Flat union-find with path halving; enough ports for 63 crossings.
struct PortUnionFind {
    std::array<std::uint16_t, 4 * 64> parent;
    int components;

    explicit PortUnionFind(int n) : components(n) {
        for (int i = 0; i < n; ++i)
            parent[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i);
    }

    std::uint16_t find(std::uint16_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(std::uint16_t a, std::uint16_t b) {
        const auto ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
};

}  // namespace

int count_circles(const Diagram& d, const KauffmanState& s) {
    const int c = d.crossing_count();
    PortUnionFind uf(4 * c);
    for (int i = 0; i < c; ++i) {
        const auto& sm = d.smoothing(i);
        const int off = s.is_b(i) ? 4 : 0;
        uf.unite(sm[static_cast<std::size_t>(off)], sm[static_cast<std::size_t>(off + 1)]);
        uf.unite(sm[static_cast<std::size_t>(off + 2)], sm[static_cast<std::size_t>(off + 3)]);
    }
    for (auto [a, b] : d.arcs())
        uf.unite(a, b);
    return uf.components + d.free_loops();
}

namespace {

// Shape check for P(1,...,1,n): m >= 1 leading ones, one trailing positive
// entry. Returns (m, n).
std::pair<int, int> general_family_shape(const PretzelSpec& spec) {
    spec.validate();
    const int k = spec.columns();
    if (k < 2)
        throw PreconditionError("spec " + spec.to_string() +
                                " is not of the form P(1,...,1,n)");
    for (int i = 0; i + 1 < k; ++i)
        if (spec.tangles[static_cast<std::size_t>(i)] != 1)
            throw PreconditionError("spec " + spec.to_string() +
                                    " is not of the form P(1,...,1,n)");
    const int n = spec.tangles.back();
    if (n < 1)
        throw PreconditionError("spec " + spec.to_string() +
                                " is not of the form P(1,...,1,n): n must be positive");
    return {k - 1, n};
}

}  // namespace

StateClassification classify_state(const PretzelSpec& spec, const KauffmanState& s) {
    const auto [m, n] = general_family_shape(spec);
    StateClassification out;
    const std::uint64_t all = (n + m >= 64) ? ~0ull : ((1ull << (m + n)) - 1);
    out.b_total = std::popcount(s.mask & all);
    out.b_on_v1 = s.is_b(0);
    out.b_on_v2 = m >= 2 && s.is_b(1);
    const std::uint64_t ones_mask = (1ull << m) - 1;
    out.p = m - std::popcount(s.mask & ones_mask);
    out.q = std::popcount((s.mask >> m) & ((n >= 64) ? ~0ull : ((1ull << n) - 1)));
    return out;
}

int classify_state_p11n(const PretzelSpec& spec, const KauffmanState& s) {
    spec.validate();
    if (spec.columns() != 3 || spec.tangles[0] != 1 || spec.tangles[1] != 1 ||
        spec.tangles[2] <= 1)
        throw PreconditionError("circle-count predictor needs P(1,1,n) with n > 1, got " +
                                spec.to_string());
    const auto cls = classify_state(spec, s);
    if (cls.b_total == 0)
        return 3;
    if (cls.b_total == 1)
        return 2;
    if (cls.b_on_v1 || cls.b_on_v2)
        return cls.b_total - 1;
    return cls.b_total + 1;
}

int classify_state_general(int m, int n, int p, int q) {
    if (m < 1 || n < 1)
        throw PreconditionError("tangle counts m and n must be positive");
    if (p < 0 || p > m || q < 0 || q > n)
        throw PreconditionError("marker counts out of range: need 0 <= p <= m and 0 <= q <= n");
    if (p > 0 && q > 0)
        return p + q - 1;
    if (p > 0)
        return p + 1;
    if (q > 0)
        return q + 1;
    return 1;
}

}  // namespace pretzel
