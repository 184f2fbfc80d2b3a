#pragma once

#include <vector>

#include "hyperg/errors.hpp"
#include "hyperg/gamma.hpp"
#include "hyperg/signed_log.hpp"

namespace hyperg {

// Symbolic product Gamma(n_1)...Gamma(n_j) / (Gamma(d_1)...Gamma(d_k)).
// Transformation prefactors are built in this form so they can be inspected,
// tested argument-by-argument, and evaluated in log space in one place.
struct GammaRatio {
    std::vector<double> numerator_args;
    std::vector<double> denominator_args;
};

namespace detail {

inline SignedLogValue gamma_ratio_signed_log(const GammaRatio& r) {
    SignedLogValue acc = SignedLogValue::one();
    for (double a : r.numerator_args) acc *= log_gamma_signed(a);
    for (double a : r.denominator_args) acc /= log_gamma_signed(a);
    return acc;
}

}  // namespace detail

// Evaluates the ratio, accumulating in log space so intermediate factors such
// as Gamma(170) cannot overflow even when the final value is moderate.
// Throws PoleError if any argument (either side) is zero or a negative integer.
inline double gamma_ratio_eval(const GammaRatio& r) {
    return detail::gamma_ratio_signed_log(r).value();
}

}  // namespace hyperg
