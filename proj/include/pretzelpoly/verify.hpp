#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pretzelpoly/bracket.hpp"

namespace pretzel {

struct VerifyOptions {
    int max_crossings = kDefaultCrossingBudget;
    std::uint64_t seed = 0x70261ull;
    std::string only;  // empty runs every check
};

struct CheckResult {
    std::string name;
    long checked = 0;
    long failed = 0;
    long skipped = 0;  // sweep units dropped for exceeding the budget
    std::vector<std::string> notes;  // first few failures and skip reasons

    bool passed() const { return failed == 0; }
};

const std::vector<std::string>& verify_check_names();

/// Runs the formula-vs-oracle suite: circle-count predictors against
/// union-find, closed bracket forms against the state sum, the tangle fast
/// path, mirror and rotation symmetries, and the Conway closed form against
/// its skein recursion. Throws InvalidSpecError for an unknown `only` name.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

/// Random pretzel spec with `columns` tangles, each entry in
/// {-max_twists..-1, 1..max_twists}. Deterministic across platforms.
PretzelSpec random_spec(std::mt19937_64& rng, int max_columns, int max_twists);

}  // namespace pretzel
