#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "hyperg/errors.hpp"
#include "hyperg/gamma.hpp"

namespace hyperg {

struct QuadratureConfig {
    double target_abs_error = 1e-10;
    int max_levels = 10;  // dyadic refinements past the coarse grid
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int levels_used = 0;
    std::int64_t evaluations = 0;
    bool converged = false;
};

namespace detail {

inline void validate(const QuadratureConfig& cfg) {
    if (!(cfg.target_abs_error > 0.0))
        throw PreconditionError("quadrature target_abs_error must be > 0");
    if (cfg.max_levels < 1 || cfg.max_levels > 12)
        throw PreconditionError("quadrature max_levels must be in [1, 12], got " +
                                std::to_string(cfg.max_levels));
}

// Integrates f over (0,1) with the tanh-sinh (double-exponential)
// substitution x = 1/(1+exp(-pi sinh t)). The integrand receives both x and
// 1-x, each computed directly and never by subtraction, so endpoint powers
// x^(p-1) (1-x)^(q-1) keep full precision into the corners. Nodes where x or
// 1-x underflows to zero are dropped; that truncation is below 1e-10 for
// endpoint exponents p, q >= 0.05 (the supported envelope; preconditioned
// callers stay at 0.2 or above).
template <class F>
QuadResult tanh_sinh_unit(F&& f, const QuadratureConfig& cfg) {
    validate(cfg);
    constexpr double t_max = 6.8;
    constexpr double h0 = 0.5;

    QuadResult res;
    const auto node = [&](double t) -> double {
        const double u = 0.5 * pi * std::sinh(t);
        const double x = 1.0 / (1.0 + std::exp(-2.0 * u));
        const double omx = 1.0 / (1.0 + std::exp(2.0 * u));
        if (x == 0.0 || omx == 0.0) return 0.0;
        ++res.evaluations;
        return f(x, omx) * (pi * std::cosh(t) * x * omx);
    };

    double sum = node(0.0);
    for (double t = h0; t <= t_max; t += h0) sum += node(t) + node(-t);
    double integral = h0 * sum;

    double h = h0;
    for (int level = 1; level <= cfg.max_levels; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t <= t_max; t += 2.0 * h) add += node(t) + node(-t);
        const double refined = 0.5 * integral + h * add;
        res.error_estimate = std::fabs(refined - integral);
        integral = refined;
        res.levels_used = level;
        if (res.error_estimate <= cfg.target_abs_error) {
            res.value = integral;
            res.converged = true;
            return res;
        }
    }
    res.value = integral;
    res.converged = false;
    return res;
}

}  // namespace detail

}  // namespace hyperg
