#pragma once

#include <cmath>
#include <limits>

namespace hyperg {

// Value represented as sign * exp(log_magnitude). sign == 0 encodes an exact
// zero, in which case log_magnitude is -inf by convention. This is the carrier
// for gamma-function arithmetic, where magnitudes overflow double early but
// logs stay small.
struct SignedLogValue {
    double log_magnitude = -std::numeric_limits<double>::infinity();
    int sign = 0;  // +1, -1, or 0 for exact zero

    static SignedLogValue zero() { return {}; }

    static SignedLogValue one() { return {0.0, +1}; }

    static SignedLogValue from_value(double v) {
        if (v == 0.0) return zero();
        return {std::log(std::fabs(v)), v > 0.0 ? +1 : -1};
    }

    double value() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log_magnitude);
    }

    bool is_zero() const { return sign == 0; }

    friend SignedLogValue operator*(const SignedLogValue& a, const SignedLogValue& b) {
        if (a.sign == 0 || b.sign == 0) return zero();
        return {a.log_magnitude + b.log_magnitude, a.sign * b.sign};
    }

    friend SignedLogValue operator/(const SignedLogValue& a, const SignedLogValue& b) {
        // Division by an exact zero is a caller bug; yield inf magnitude.
        if (a.sign == 0) return zero();
        return {a.log_magnitude - b.log_magnitude, a.sign * b.sign};
    }

    SignedLogValue& operator*=(const SignedLogValue& b) { return *this = *this * b; }
    SignedLogValue& operator/=(const SignedLogValue& b) { return *this = *this / b; }
};

}  // namespace hyperg
