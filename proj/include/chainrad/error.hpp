#pragma once

#include <stdexcept>
#include <string>

namespace chainrad {

/// A caller broke an operation's precondition (bad index, sector mismatch,
/// parameter outside its domain). `parameter()` names the offending input.
class ContractViolation : public std::invalid_argument {
public:
    ContractViolation(std::string parameter, const std::string& what)
        : std::invalid_argument(what), parameter_(std::move(parameter)) {}

    const std::string& parameter() const noexcept { return parameter_; }

private:
    std::string parameter_;
};

/// Requested sector has more basis states than the materialization guard allows.
class SectorTooLarge : public ContractViolation {
public:
    using ContractViolation::ContractViolation;
};

/// A numerical routine failed to reach its accuracy target.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace chainrad
