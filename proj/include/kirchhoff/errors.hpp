#pragma once

#include <stdexcept>
#include <string>

namespace kirchhoff {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mode enumeration would exceed the configured hard cap.
struct CapacityExceeded : Error {
    using Error::Error;
};

/// A cubic/product operation was requested with a harmonic budget below the
/// exact bandwidth of the result.
struct AliasingBudgetExceeded : Error {
    using Error::Error;
};

/// The weight 1 + alpha(t) is not safely positive (sup-norm bound violated).
struct WeightNotPositive : Error {
    using Error::Error;
};

/// Eigenproblem truncation too small for the requested eigenvalue count.
struct DiscretizationTooCoarse : Error {
    using Error::Error;
};

/// A spectrum does not cover the eigenvalue range a check or solve needs.
struct SpectrumTooShort : Error {
    using Error::Error;
};

/// A divisor fell inside the Diophantine gap during inversion.
struct NonResonanceViolated : Error {
    NonResonanceViolated(std::string msg, int mode_j, int level_l, double divisor_abs)
        : Error(std::move(msg)), j(mode_j), l(level_l), divisor(divisor_abs) {}
    int j;
    int l;
    double divisor;
};

/// Neumann series terms stopped contracting (smallness condition violated).
struct NeumannDiverging : Error {
    using Error::Error;
};

/// The computed inverse failed its in-line residual contract.
struct InverseContractViolated : Error {
    using Error::Error;
};

/// Space-time mean of the forcing is nonzero in the periodic setting.
struct MeanNotZero : Error {
    using Error::Error;
};

/// Invalid scalar input (nonpositive amplitude, malformed parameter, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Configuration file or override failed validation.
struct ConfigError : Error {
    using Error::Error;
};

/// A statistic was requested on too small a sample.
struct InsufficientData : Error {
    using Error::Error;
};

}  // namespace kirchhoff
