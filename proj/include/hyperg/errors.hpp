#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperg {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Gamma evaluated at 0 or a negative integer.
struct PoleError : Error {
    explicit PoleError(double argument)
        : Error("gamma pole at argument " + std::to_string(argument)), argument(argument) {}
    double argument;
};

// Argument outside the supported domain (x range, bad tolerance, divergent case).
struct DomainError : Error {
    using Error::Error;
};

// A lower parameter makes a denominator Pochhammer vanish before termination.
struct LowerPoleError : Error {
    LowerPoleError(double parameter, std::int64_t index)
        : Error("lower parameter " + std::to_string(parameter) +
                " vanishes in the denominator at term index " + std::to_string(index)),
          parameter(parameter),
          index(index) {}
    double parameter;
    std::int64_t index;  // first series index whose denominator Pochhammer is zero
};

// Unit-argument series with non-positive parametric excess and no termination.
struct DivergenceError : Error {
    using Error::Error;
};

// Excess positive but too small to sum directly; a transformed representation
// with a larger excess should be used instead (see choose_representation).
struct SlowConvergenceError : Error {
    using Error::Error;
};

// A stated precondition does not hold; the message names the violated inequality.
struct PreconditionError : Error {
    using Error::Error;
};

struct NoValidRepresentationError : Error {
    using Error::Error;
};

// Exact rational path: a denominator factor is exactly zero.
struct ZeroDenominatorError : Error {
    using Error::Error;
};

// Quadrature refinement exhausted without meeting the target; carries the best
// estimate and the achieved error bound.
struct AccuracyNotReached : Error {
    AccuracyNotReached(double estimate, double achieved_error)
        : Error("quadrature accuracy not reached: estimate " + std::to_string(estimate) +
                ", achieved error " + std::to_string(achieved_error)),
          estimate(estimate),
          achieved_error(achieved_error) {}
    double estimate;
    double achieved_error;
};

}  // namespace hyperg
