#pragma once

#include <stdexcept>
#include <string>

namespace semihyper {

/// Raised when two values live over incompatible domains (different prize
/// sets, mismatched stream shapes, a finite-horizon functional applied to an
/// infinite stream, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised for out-of-range arguments (mixture coefficient outside [0,1],
/// period index out of range, ...).
struct argument_error : std::invalid_argument {
    explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a model or representation violates its parameter constraints
/// (delta outside (0,1), beta outside (0,1], decreasing bias weights, ...).
struct constraint_error : std::runtime_error {
    explicit constraint_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an adaptive procedure runs out of its query budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a preference source answers in a way that contradicts the
/// assumptions an adaptive procedure relies on (non-monotone verdicts along a
/// mixture line, unstable brackets, ...).
struct oracle_error : std::runtime_error {
    explicit oracle_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace semihyper
