#pragma once

#include <stdexcept>
#include <string>

namespace golayks {

/// Thrown when a search or enumeration hits its node budget before
/// completing. Partial results are never returned silently.
struct BudgetExhaustedError : std::runtime_error {
    explicit BudgetExhaustedError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when q^k exceeds the configured enumeration limit.
struct EnumerationLimitError : std::runtime_error {
    explicit EnumerationLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace golayks
