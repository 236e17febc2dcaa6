#pragma once

#include <stdexcept>
#include <string>

namespace swath {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: footprint, grid, polygon, limits or config.
class InvalidSpecError : public Error {
public:
    using Error::Error;
};

class EmptyRegionError : public Error {
public:
    using Error::Error;
};

/// No interior grid line exists on the chosen cut axis.
class CutError : public Error {
public:
    using Error::Error;
};

/// Partition count exceeds the exact solver limit; use the GA route instead.
class SolverLimitError : public Error {
public:
    using Error::Error;
};

/// A caller broke an operation precondition.
class ContractError : public Error {
public:
    using Error::Error;
};

class IncompleteMatrixError : public Error {
public:
    using Error::Error;
};

class CoverageError : public Error {
public:
    CoverageError(const std::string& what, std::string diagnostics_dir)
        : Error(what), diagnostics_dir_(std::move(diagnostics_dir)) {}
    const std::string& diagnostics_dir() const { return diagnostics_dir_; }

private:
    std::string diagnostics_dir_;
};

}  // namespace swath
