#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>

#include "hyperg/gamma.hpp"

namespace hyperg {

// Gauss series parameters: upper a, b; lower c.
struct Params2F1 {
    double a, b, c;
};

// Generalized series parameters: upper a, b, c; lower d, e.
struct Params3F2 {
    double a, b, c, d, e;
};

// Parametric excess. For the Gauss series at x = 1 the terms decay like
// n^(-1-excess); the unit-argument value is finite iff excess > 0.
inline double excess_2f1(const Params2F1& p) { return p.c - p.a - p.b; }

// Same role for the generalized series at unit argument.
inline double excess_3f2(const Params3F2& p) { return p.d + p.e - p.a - p.b - p.c; }

namespace detail {

// Smallest m >= 0 with x == -m, if any. Detecting termination must be exact:
// a parameter merely close to a negative integer does not terminate anything.
inline std::optional<std::int64_t> nonpositive_integer_order(double x) {
    if (!is_nonpositive_integer(x)) return std::nullopt;
    return static_cast<std::int64_t>(-x);
}

// Termination index of a series with the given upper parameters: the smallest
// m such that some upper parameter equals -m. Terms with n > m vanish.
template <std::size_t N>
std::optional<std::int64_t> termination_order(const std::array<double, N>& upper) {
    std::optional<std::int64_t> best;
    for (double u : upper)
        if (auto m = nonpositive_integer_order(u); m && (!best || *m < *best)) best = m;
    return best;
}

// First term index whose denominator vanishes because of lower parameter x,
// i.e. the index n for which (x)_n first contains the factor zero.
inline std::optional<std::int64_t> lower_pole_index(double x) {
    if (auto m = nonpositive_integer_order(x)) return *m + 1;
    return std::nullopt;
}

}  // namespace detail

// Upper and lower parameter lists sorted ascending. Two parameter sets related
// by reordering within a list describe the same series term by term, so sorted
// equality is the right notion of "same function".
inline Params3F2 canonicalized(const Params3F2& p) {
    std::array<double, 3> up{p.a, p.b, p.c};
    std::array<double, 2> lo{p.d, p.e};
    std::sort(up.begin(), up.end());
    std::sort(lo.begin(), lo.end());
    return {up[0], up[1], up[2], lo[0], lo[1]};
}

inline bool canonical_equal(const Params3F2& p, const Params3F2& q) {
    const Params3F2 cp = canonicalized(p), cq = canonicalized(q);
    return cp.a == cq.a && cp.b == cq.b && cp.c == cq.c && cp.d == cq.d && cp.e == cq.e;
}

}  // namespace hyperg
