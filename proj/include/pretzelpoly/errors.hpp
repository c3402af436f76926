#pragma once

#include <stdexcept>

namespace pretzel {

// Malformed pretzel spec: zero tangle entries, parse failures, bad wiring.
class InvalidSpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation was asked to run outside its supported family or parameter
// domain (e.g. a closed formula on a spec it does not cover).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A state enumeration would exceed the configured crossing budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pretzel
