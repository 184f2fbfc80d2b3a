#pragma once

#include <cstdint>
#include <string>

#include "hyperg/errors.hpp"
#include "hyperg/rational.hpp"

namespace hyperg {

// Generalized series parameters as exact rationals, for the terminating paths
// where floating point would hide whether an identity holds exactly.
struct Params3F2Q {
    Rational a, b, c, d, e;
};

// Exact value of the generalized series at unit argument when it terminates:
// sum(n=0..m) (a)_n (b)_n (c)_n / ((d)_n (e)_n n!). Requires one upper
// parameter to equal -m exactly. A zero denominator factor reached while the
// running term is still nonzero is rejected; so is the degenerate 0/0 case.
inline Rational sum_3f2_terminating_exact(const Params3F2Q& p, std::int64_t m) {
    if (m < 0) throw PreconditionError("termination index must be >= 0, got " + std::to_string(m));
    const Rational minus_m{-m};
    if (p.a != minus_m && p.b != minus_m && p.c != minus_m)
        throw PreconditionError("no upper parameter equals -" + std::to_string(m) +
                                "; the series does not terminate there");

    const Rational zero{0}, one{1};
    Rational sum{0}, term{1};
    for (std::int64_t k = 0;; ++k) {
        sum += term;
        if (k == m) break;
        if (term == zero) break;  // an earlier upper hit zero; all later terms vanish
        const Rational rk{k};
        const Rational den = (p.d + rk) * (p.e + rk) * (rk + one);
        if (den == zero)
            throw ZeroDenominatorError("lower parameter Pochhammer vanishes at term index " +
                                       std::to_string(k + 1));
        term = term * (p.a + rk) * (p.b + rk) * (p.c + rk) / den;
    }
    return sum;
}

}  // namespace hyperg
