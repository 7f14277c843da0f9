#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace fronts {

using Vector = Eigen::ArrayXd;

// Configuration or input files are malformed.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter regime required by a formula is violated.
struct RegimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerical failure inside a solver (instability, NaN, step underflow).
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A runtime invariant monitor (density or front-velocity bound) was breached.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Root bracketing or similar numerical search failed; carries the scan record.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bisection over simulation outcomes could not reach a conclusive bracket.
struct ThresholdError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested post-processing exceeds the stored data (e.g. window past snapshot domain).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fronts
