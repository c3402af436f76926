#include "pretzelpoly/verify.hpp"

#include <functional>

#include "pretzelpoly/conway.hpp"

namespace pretzel {

namespace {

constexpr std::size_t kMaxNotes = 8;

void note(CheckResult& r, std::string msg) {
    if (r.notes.size() < kMaxNotes)
        r.notes.push_back(std::move(msg));
}

void record_mismatch(CheckResult& r, std::string msg) {
    ++r.failed;
    note(r, std::move(msg));
}

// uniform int in [lo, hi] without uniform_int_distribution, whose output is
// implementation-defined; this keeps seeds reproducible across toolchains
int rand_range(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

CheckResult check_lemma44(const VerifyOptions& opt) {
    CheckResult r;
    r.name = "lemma44";
    for (int n = 2; n <= 10; ++n) {
        const PretzelSpec spec{{1, 1, n}};
        if (spec.crossing_count() > opt.max_crossings) {
            ++r.skipped;
            note(r, "n=" + std::to_string(n) + " skipped: " +
                        std::to_string(spec.crossing_count()) + " crossings over budget");
            continue;
        }
        const Diagram d = build_diagram(spec);
        const std::uint64_t states = 1ull << spec.crossing_count();
        for (std::uint64_t mask = 0; mask < states; ++mask) {
            const KauffmanState s{mask};
            const int predicted = classify_state_p11n(spec, s);
            const int actual = count_circles(d, s);
            ++r.checked;
            if (predicted != actual)
                record_mismatch(r, "P(1,1," + std::to_string(n) + ") state " +
                                       state_to_string(s, spec.crossing_count()) +
                                       ": predicted " + std::to_string(predicted) + ", got " +
                                       std::to_string(actual));
        }
    }
    return r;
}

CheckResult check_lemma47(const VerifyOptions& opt) {
    CheckResult r;
    r.name = "lemma47";
    for (int m = 1; m <= 4; ++m)
        for (int n = 2; n <= 8; ++n) {
            PretzelSpec spec;
            spec.tangles.assign(static_cast<std::size_t>(m), 1);
            spec.tangles.push_back(n);
            if (spec.crossing_count() > opt.max_crossings) {
                ++r.skipped;
                note(r, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " skipped: over budget");
                continue;
            }
            const Diagram d = build_diagram(spec);
            const std::uint64_t states = 1ull << spec.crossing_count();
            for (std::uint64_t mask = 0; mask < states; ++mask) {
                const KauffmanState s{mask};
                const auto cls = classify_state(spec, s);
                const int predicted = classify_state_general(m, n, cls.p, cls.q);
                const int actual = count_circles(d, s);
                ++r.checked;
                if (predicted != actual)
                    record_mismatch(r, spec.to_string() + " state " +
                                           state_to_string(s, spec.crossing_count()) +
                                           ": predicted " + std::to_string(predicted) + ", got " +
                                           std::to_string(actual));
            }
        }
    return r;
}

CheckResult check_closed_p11n(const VerifyOptions& opt) {
    CheckResult r;
    r.name = "closed-p11n";
    for (int n = 2; n <= 14; ++n) {
        const PretzelSpec spec{{1, 1, n}};
        if (spec.crossing_count() > opt.max_crossings) {
            ++r.skipped;
            note(r, "n=" + std::to_string(n) + " skipped: over budget");
            continue;
        }
        ++r.checked;
        if (bracket_closed_p11n(n).polynomial != bracket_statesum(spec, opt.max_crossings).polynomial)
            record_mismatch(r, "closed form disagrees with state sum at n=" + std::to_string(n));
    }
    return r;
}

CheckResult check_closed_general(const VerifyOptions& opt) {
    CheckResult r;
    r.name = "closed-general";
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 8; ++n) {
            PretzelSpec spec;
            spec.tangles.assign(static_cast<std::size_t>(m), 1);
            spec.tangles.push_back(n);
            if (spec.crossing_count() > opt.max_crossings) {
                ++r.skipped;
                note(r, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " skipped: over budget");
                continue;
            }
            ++r.checked;
            if (bracket_closed_general(m, n).polynomial !=
                bracket_statesum(spec, opt.max_crossings).polynomial)
                record_mismatch(r, "closed form disagrees with state sum at m=" +
                                       std::to_string(m) + " n=" + std::to_string(n));
        }
    return r;
}

CheckResult check_tangle(const VerifyOptions& opt) {
    CheckResult r;
    r.name = "tangle";
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < 200; ++i) {
        const PretzelSpec spec = random_spec(rng, 4, 4);
        if (spec.crossing_count() > opt.max_crossings) {
            ++r.skipped;
            continue;
        }
        ++r.checked;
        if (bracket_tangle_eval(spec).polynomial !=
            bracket_statesum(spec, opt.max_crossings).polynomial)
            record_mismatch(r, "tangle evaluation disagrees with state sum on P(" +
                                   spec.to_string() + ")");
    }
    return r;
}

CheckResult check_mirror(const VerifyOptions& opt) {
    CheckResult r;
    r.name = "mirror";
    std::mt19937_64 rng(opt.seed + 1);
    for (int i = 0; i < 100; ++i) {
        const PretzelSpec spec = random_spec(rng, 4, 4);
        if (spec.crossing_count() > opt.max_crossings) {
            ++r.skipped;
            continue;
        }
        ++r.checked;
        const auto direct = bracket_statesum(spec, opt.max_crossings).polynomial;
        const auto mirrored = bracket_statesum(spec.mirrored(), opt.max_crossings).polynomial;
        if (mirrored != substitute_inverse(direct))
            record_mismatch(r, "mirror identity fails on P(" + spec.to_string() + ")");
    }
    return r;
}

CheckResult check_rotation(const VerifyOptions& opt) {
    CheckResult r;
    r.name = "rotation";
    std::mt19937_64 rng(opt.seed + 2);
    for (int i = 0; i < 100; ++i) {
        const PretzelSpec spec = random_spec(rng, 4, 4);
        if (spec.crossing_count() > opt.max_crossings) {
            ++r.skipped;
            continue;
        }
        ++r.checked;
        if (bracket_statesum(spec.rotated(), opt.max_crossings).polynomial !=
            bracket_statesum(spec, opt.max_crossings).polynomial)
            record_mismatch(r, "rotation identity fails on P(" + spec.to_string() + ")");
    }
    return r;
}

CheckResult check_conway(const VerifyOptions&) {
    CheckResult r;
    r.name = "conway";
    for (int n = -15; n <= 15; ++n) {
        if (n == 0)
            continue;
        ++r.checked;
        if (conway_closed_p11n(n) != conway_skein_p11n(n))
            record_mismatch(r, "closed form disagrees with skein recursion at n=" +
                                   std::to_string(n));
    }
    return r;
}

using CheckFn = CheckResult (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, CheckFn>>& check_table() {
    static const std::vector<std::pair<std::string, CheckFn>> table{
        {"lemma44", check_lemma44},
        {"lemma47", check_lemma47},
        {"closed-p11n", check_closed_p11n},
        {"closed-general", check_closed_general},
        {"tangle", check_tangle},
        {"mirror", check_mirror},
        {"rotation", check_rotation},
        {"conway", check_conway},
    };
    return table;
}

}  // namespace

PretzelSpec random_spec(std::mt19937_64& rng, int max_columns, int max_twists) {
    PretzelSpec spec;
    const int k = rand_range(rng, 1, max_columns);
    spec.tangles.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const int magnitude = rand_range(rng, 1, max_twists);
        spec.tangles.push_back(rand_range(rng, 0, 1) ? magnitude : -magnitude);
    }
    return spec;
}

const std::vector<std::string>& verify_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : check_table())
            out.push_back(name);
        return out;
    }();
    return names;
}

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
    if (!options.only.empty()) {
        bool known = false;
        for (const auto& [name, fn] : check_table())
            known = known || name == options.only;
        if (!known)
            throw InvalidSpecError("unknown check '" + options.only + "'");
    }
    std::vector<CheckResult> results;
    for (const auto& [name, fn] : check_table()) {
        if (!options.only.empty() && name != options.only)
            continue;
        results.push_back(fn(options));
    }
    return results;
}

}  // namespace pretzel
