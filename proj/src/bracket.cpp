#include "pretzelpoly/bracket.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <thread>
#include <vector>

namespace pretzel {

std::string_view method_name(BracketMethod m) {
    switch (m) {
        case BracketMethod::statesum: return "statesum";
        case BracketMethod::closed_p11n: return "closed_p11n";
        case BracketMethod::closed_general: return "closed_general";
        case BracketMethod::tangle: return "tangle";
    }
    return "?";
}

LaurentPoly bracket_delta() {
    return LaurentPoly::monomial(-1, 2, Var::A) + LaurentPoly::monomial(-1, -2, Var::A);
}

namespace {

std::vector<LaurentPoly> delta_powers(int max_exp) {
    std::vector<LaurentPoly> powers;
    powers.reserve(static_cast<std::size_t>(max_exp) + 1);
    powers.push_back(LaurentPoly::one(Var::A));
    const LaurentPoly delta = bracket_delta();
    for (int i = 1; i <= max_exp; ++i)
        powers.push_back(powers.back() * delta);
    return powers;
}

BigInt binomial(int a, int b) {
    if (b < 0 || b > a)
        return 0;
    b = std::min(b, a - b);
    BigInt out = 1;
    for (int i = 1; i <= b; ++i) {
        out *= a - b + i;
        out /= i;  // exact: product of i consecutive integers
    }
    return out;
}

// Per-worker tally of states bucketed by (B-marker count, circles-1); the
// polynomial is assembled once at the end. Counts fit in uint64 because a
// bucket holds at most 2^c <= 2^63 states.
struct StateTally {
    int crossings;
    int max_loops;  // circles-1 ranges over 0..max_loops
    std::vector<std::uint64_t> counts;

    StateTally(int c, int loops)
        : crossings(c), max_loops(loops),
          counts(static_cast<std::size_t>(c + 1) * static_cast<std::size_t>(loops + 1), 0) {}

    void add(int b_markers, int circles) {
        counts[static_cast<std::size_t>(b_markers) * static_cast<std::size_t>(max_loops + 1) +
               static_cast<std::size_t>(circles - 1)] += 1;
    }

    void merge(const StateTally& other) {
        for (std::size_t i = 0; i < counts.size(); ++i)
            counts[i] += other.counts[i];
    }

    LaurentPoly to_polynomial() const {
        const auto powers = delta_powers(max_loops);
        LaurentPoly acc(Var::A);
        for (int b = 0; b <= crossings; ++b)
            for (int r = 0; r <= max_loops; ++r) {
                const std::uint64_t n =
                    counts[static_cast<std::size_t>(b) * static_cast<std::size_t>(max_loops + 1) +
                           static_cast<std::size_t>(r)];
                if (n == 0)
                    continue;
                acc += LaurentPoly::monomial(BigInt(n), crossings - 2 * b, Var::A) *
                       powers[static_cast<std::size_t>(r)];
            }
        return acc;
    }
};

void tally_range(const Diagram& d, std::uint64_t begin, std::uint64_t end, StateTally& tally) {
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        const KauffmanState s{mask};
        tally.add(std::popcount(mask), count_circles(d, s));
    }
}

void enforce_budget(int crossings, int max_crossings) {
    const int budget = std::min(max_crossings, kMaxEnumerableCrossings);
    if (crossings > budget)
        throw BudgetError("state sum over " + std::to_string(crossings) +
                          " crossings exceeds the enumeration budget of " +
                          std::to_string(budget) + " (2^c states)");
}

}  // namespace

BracketResult bracket_statesum(const Diagram& d, int max_crossings, unsigned threads) {
    const int c = d.crossing_count();
    enforce_budget(c, max_crossings);

    const std::uint64_t states = 1ull << c;
    unsigned workers = threads;
    if (workers == 0)
        workers = states >= (1ull << 18) ? std::max(1u, std::thread::hardware_concurrency()) : 1;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, states));

    const int max_loops = c + d.free_loops();  // circles-1 <= c + free loops
    StateTally total(c, max_loops);
    if (workers <= 1) {
        tally_range(d, 0, states, total);
    } else {
        std::vector<StateTally> partial(workers, StateTally(c, max_loops));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = states / workers * w;
            const std::uint64_t end = w + 1 == workers ? states : states / workers * (w + 1);
            pool.emplace_back([&d, begin, end, &t = partial[w]] { tally_range(d, begin, end, t); });
        }
        for (auto& th : pool)
            th.join();
        for (const auto& part : partial)
            total.merge(part);
    }

    BracketResult out;
    out.polynomial = total.to_polynomial();
    out.method = BracketMethod::statesum;
    out.state_count = states;
    return out;
}

BracketResult bracket_statesum(const PretzelSpec& spec, int max_crossings, unsigned threads) {
    spec.validate();
    enforce_budget(spec.crossing_count(), max_crossings);
    return bracket_statesum(build_diagram(spec), max_crossings, threads);
}

BracketResult bracket_closed_p11n(int n) {
    if (n < 2)
        throw PreconditionError("closed form for <P(1,1,n)> needs an integer n >= 2, got n=" +
                                std::to_string(n));
    const auto powers = delta_powers(n);
    auto a_pow = [](const BigInt& coeff, int exp) {
        return LaurentPoly::monomial(coeff, exp, Var::A);
    };

    LaurentPoly acc = a_pow(1, n + 2) * powers[2];
    acc += a_pow(n + 2, n) * powers[1];
    for (int j = 2; j <= n + 2; ++j)
        acc += a_pow(binomial(n + 1, j - 1) + binomial(n, j - 1), n + 2 * (1 - j)) *
               powers[static_cast<std::size_t>(j - 2)];
    for (int j = 2; j <= n; ++j)
        acc += a_pow(binomial(n, j), n + 2 * (1 - j)) * powers[static_cast<std::size_t>(j)];

    return {acc, BracketMethod::closed_p11n, 0};
}

BracketResult bracket_closed_general(int m, int n) {
    if (m < 1 || n < 1)
        throw PreconditionError(
            "closed form for <P(1,...,1,n)> needs m >= 1 single-crossing tangles and n >= 1, got m=" +
            std::to_string(m) + " n=" + std::to_string(n));
    const auto powers = delta_powers(m + n);
    auto a_pow = [](const BigInt& coeff, int exp) {
        return LaurentPoly::monomial(coeff, exp, Var::A);
    };

    LaurentPoly acc = a_pow(1, n - m);
    for (int p = 1; p <= m; ++p)
        for (int q = 1; q <= n; ++q)
            acc += a_pow(binomial(m, p) * binomial(n, q), 2 * (p - q) + n - m) *
                   powers[static_cast<std::size_t>(p + q - 2)];
    for (int p = 1; p <= m; ++p)
        acc += a_pow(binomial(m, p), 2 * p + n - m) * powers[static_cast<std::size_t>(p)];
    for (int q = 1; q <= n; ++q)
        acc += a_pow(binomial(n, q), -2 * q + n - m) * powers[static_cast<std::size_t>(q)];

    return {acc, BracketMethod::closed_general, 0};
}

BracketResult bracket_tangle_eval(const PretzelSpec& spec) {
    spec.validate();
    const int k = spec.columns();
    auto mono = [](int coeff, int exp) { return LaurentPoly::monomial(coeff, exp, Var::A); };

    // Reduce each column of p crossings to x*(vertical pair) + y*(horizontal
    // pair). One crossing is A*vertical + A^-1*horizontal (mirrored when
    // negative); stacking another multiplies through the pair algebra
    //   vert.vert = vert,  vert.horiz = horiz.vert = horiz,
    //   horiz.horiz = delta*horiz,
    // which collapses to x' = A x, y' = A^-1 x - A^-3 y for positive
    // columns. The recurrence unrolls to x = A^p and
    // y = sum_{i=0}^{p-1} (-1)^i A^{p-2-4i}, built directly so columns with
    // many twists stay linear.
    std::vector<std::pair<LaurentPoly, LaurentPoly>> columns;
    columns.reserve(static_cast<std::size_t>(k));
    for (int p : spec.tangles) {
        const int s = p > 0 ? 1 : -1;
        const int len = std::abs(p);
        LaurentPoly x = mono(1, s * len);
        LaurentPoly y(Var::A);
        for (int i = 0; i < len; ++i)
            y += mono(i % 2 == 0 ? 1 : -1, s * (len - 2 - 4 * i));
        columns.emplace_back(std::move(x), std::move(y));
    }

    // Expand the product over columns, grouped by how many stay vertical:
    // g[v] = sum over choices with v vertical columns of the coefficient
    // product. The closure of v vertical and k-v horizontal columns smooths
    // to v circles (two when every column is horizontal).
    std::vector<LaurentPoly> g(static_cast<std::size_t>(k) + 1, LaurentPoly(Var::A));
    g[0] = LaurentPoly::one(Var::A);
    for (int i = 0; i < k; ++i) {
        const auto& [x, y] = columns[static_cast<std::size_t>(i)];
        for (int v = i + 1; v >= 0; --v) {
            LaurentPoly next = g[static_cast<std::size_t>(v)] * y;
            if (v > 0)
                next += g[static_cast<std::size_t>(v - 1)] * x;
            g[static_cast<std::size_t>(v)] = std::move(next);
        }
    }

    const auto powers = delta_powers(std::max(k, 2));
    LaurentPoly acc(Var::A);
    for (int v = 0; v <= k; ++v) {
        const int circles = v >= 1 ? v : 2;
        acc += g[static_cast<std::size_t>(v)] * powers[static_cast<std::size_t>(circles - 1)];
    }

    return {acc, BracketMethod::tangle, 0};
}

}  // namespace pretzel
