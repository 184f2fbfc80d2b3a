#pragma once

#include <cmath>
#include <cstdint>

#include "hyperg/errors.hpp"
#include "hyperg/signed_log.hpp"

namespace hyperg {

namespace detail {

inline constexpr double pi = 3.141592653589793238462643383279502884;

inline bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// Lanczos approximation of ln Gamma on (0, inf), g = 4.7421875, 15 terms
// (Godfrey coefficient set). Relative accuracy is a few ulp across the range;
// the unit tests pin it against independently computed references.
inline double lanczos_ln_gamma_pos(double x) {
    static const double coef[14] = {
        57.156235665862923517,     -59.597960355475491248,
        14.136097974741747174,     -0.49191381609762019978,
        0.33994649984811888699e-4, 0.46523628927048575665e-4,
        -0.98374475304879564677e-4, 0.15808870322491248884e-3,
        -0.21026444172410488319e-3, 0.21743961811521264320e-3,
        -0.16431810653676389022e-3, 0.84418223983852743293e-4,
        -0.26190838401581408670e-4, 0.36899182659531622704e-5,
    };
    const double t = x + 5.2421875;  // x + g + 1/2
    double ser = 0.99999999999999709182;
    double y = x;
    for (double c : coef) ser += c / ++y;
    return (x + 0.5) * std::log(t) - t + std::log(2.5066282746310005 * ser / x);
}

// |sin(pi x)| computed from the distance of x to the nearest integer, so the
// argument reduction does not lose precision for large |x|.
inline double abs_sin_pi(double x) {
    const double r = x - std::floor(x);    // in [0, 1)
    const double m = std::fmin(r, std::ceil(x) - x);
    return std::sin(pi * m);
}

}  // namespace detail

// ln |Gamma(x)| together with the sign of Gamma(x). Throws PoleError at zero
// and negative integers. Negative arguments go through the reflection formula.
inline SignedLogValue log_gamma_signed(double x) {
    if (detail::is_nonpositive_integer(x)) throw PoleError(x);
    if (x > 0.0) return {detail::lanczos_ln_gamma_pos(x), +1};
    // Gamma(x) Gamma(1-x) = pi / sin(pi x); the sign alternates per unit
    // interval: positive on (-2,-1), negative on (-1,0), and so on.
    const double log_mag = std::log(detail::pi) - std::log(detail::abs_sin_pi(x)) -
                           detail::lanczos_ln_gamma_pos(1.0 - x);
    const auto cell = static_cast<std::int64_t>(std::floor(x));
    const int sign = (cell % 2 == 0) ? +1 : -1;
    return {log_mag, sign};
}

// Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1. Direct product,
// exact zeros included, so it is also correct when x is a non-positive integer.
inline double pochhammer(double x, std::int64_t n) {
    double p = 1.0;
    for (std::int64_t k = 0; k < n; ++k) p *= x + static_cast<double>(k);
    return p;
}

}  // namespace hyperg
