#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "hyperg/errors.hpp"
#include "hyperg/exact.hpp"
#include "hyperg/gamma_ratio.hpp"
#include "hyperg/params.hpp"
#include "hyperg/series.hpp"

namespace hyperg {

enum class Identity3F2 { identity, kummer, thomae };

inline const char* to_string(Identity3F2 id) {
    switch (id) {
        case Identity3F2::kummer: return "kummer";
        case Identity3F2::thomae: return "thomae";
        default: return "identity";
    }
}

// A unit-argument series rewritten as prefactor * series(params). The
// prefactor stays symbolic so callers can inspect it and evaluation happens
// in log space exactly once.
struct Transformed3F2 {
    GammaRatio prefactor;
    Params3F2 params;
    Identity3F2 name = Identity3F2::identity;
};

// Argument-transformed Gauss series: value = (1-x)^power_exponent * series(params, x).
struct Transformed2F1 {
    double power_exponent;
    Params2F1 params;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw PreconditionError(what);
}

inline void reject_gamma_poles(const GammaRatio& r) {
    for (double x : r.numerator_args)
        if (is_nonpositive_integer(x)) throw PoleError(x);
    for (double x : r.denominator_args)
        if (is_nonpositive_integer(x)) throw PoleError(x);
}

}  // namespace detail

// Rewrites the series with excess s = d+e-a-b-c as one whose excess equals a.
// Preconditions a > 0 and s > 0; a gamma pole anywhere in the prefactor
// (including a pole formally cancelled by a zero of the series) is rejected.
inline Transformed3F2 thomae_map(const Params3F2& p) {
    const double s = excess_3f2(p);
    detail::require(p.a > 0.0, "thomae requires a > 0, got a = " + std::to_string(p.a));
    detail::require(s > 0.0, "thomae requires excess d+e-a-b-c > 0, got " + std::to_string(s));
    const double deab = p.d + p.e - p.a - p.b;
    const double deac = p.d + p.e - p.a - p.c;
    Transformed3F2 t;
    t.prefactor = {{p.d, p.e, s}, {p.a, deab, deac}};
    detail::reject_gamma_poles(t.prefactor);
    t.params = {p.d - p.a, p.e - p.a, s, deab, deac};
    t.name = Identity3F2::thomae;
    return t;
}

// Rewrites the series as one whose excess equals e-c. Preconditions e-c > 0
// and s > 0; prefactor poles rejected as above.
inline Transformed3F2 kummer_map(const Params3F2& p) {
    const double s = excess_3f2(p);
    const double ec = p.e - p.c;
    detail::require(ec > 0.0, "kummer requires e - c > 0, got " + std::to_string(ec));
    detail::require(s > 0.0, "kummer requires excess d+e-a-b-c > 0, got " + std::to_string(s));
    const double deab = p.d + p.e - p.a - p.b;
    Transformed3F2 t;
    t.prefactor = {{p.e, s}, {ec, deab}};
    detail::reject_gamma_poles(t.prefactor);
    t.params = {p.d - p.a, p.d - p.b, p.c, p.d, deab};
    t.name = Identity3F2::kummer;
    return t;
}

// Second Euler transformation of the Gauss series, valid for 0 <= x < 1:
// F(a,b;c;x) = (1-x)^(c-a-b) F(c-a, c-b; c; x).
inline Transformed2F1 euler_second_map(const Params2F1& p) {
    if (const auto pole = detail::lower_pole_index(p.c)) throw LowerPoleError(p.c, *pole);
    return {excess_2f1(p), {p.c - p.a, p.c - p.b, p.c}};
}

// Closed form of the Gauss series at unit argument:
// Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)). Requires excess > 0.
inline double gauss_sum(const Params2F1& p) {
    const double s = excess_2f1(p);
    detail::require(s > 0.0, "gauss closed form requires excess c - a - b > 0, got " +
                                 std::to_string(s));
    const GammaRatio r{{p.c, s}, {p.c - p.a, p.c - p.b}};
    detail::reject_gamma_poles(r);
    return gamma_ratio_eval(r);
}

// Closed form of the balanced terminating series
// 3F2(-n, a, b; c, 1+a+b-c-n; 1): (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n),
// evaluated exactly over rationals.
inline Rational saalschutz_sum(std::int64_t n, const Rational& a, const Rational& b,
                               const Rational& c) {
    if (n < 0) throw PreconditionError("saalschutz requires n >= 0, got " + std::to_string(n));
    const Rational den = pochhammer_rational(c, n) * pochhammer_rational(c - a - b, n);
    if (den == Rational{0})
        throw ZeroDenominatorError("saalschutz denominator Pochhammer vanishes");
    return pochhammer_rational(c - a, n) * pochhammer_rational(c - b, n) / den;
}

// Picks the representation whose image series has the largest excess, i.e.
// the fastest term decay: identity keeps excess s, kummer yields e-c, thomae
// yields a. Terminating input always stays identity (the sum is exact).
// Ties break toward identity, then kummer, then thomae. Throws
// NoValidRepresentationError when s <= 0 and no map applies.
inline Transformed3F2 choose_representation(const Params3F2& p) {
    Transformed3F2 ident{{}, p, Identity3F2::identity};
    if (detail::termination_order<3>({p.a, p.b, p.c})) return ident;

    const double s = excess_3f2(p);
    bool have = false;
    Transformed3F2 best;
    double best_excess = 0.0;
    if (s > 0.0) {
        best = ident;
        best_excess = s;
        have = true;
    }
    try {
        Transformed3F2 k = kummer_map(p);
        if (!have || p.e - p.c > best_excess) {
            best = k;
            best_excess = p.e - p.c;
            have = true;
        }
    } catch (const Error&) {
    }
    try {
        Transformed3F2 t = thomae_map(p);
        if (!have || p.a > best_excess) {
            best = t;
            best_excess = p.a;
            have = true;
        }
    } catch (const Error&) {
    }
    if (!have)
        throw NoValidRepresentationError(
            "excess d+e-a-b-c = " + std::to_string(s) +
            " is not positive and no transformation precondition holds");
    return best;
}

// Evaluates prefactor * series(params) at unit argument. This is the single
// code path for transformed evaluation; identity verification and the proof
// chain both go through it.
inline SeriesResult evaluate_transformed(const Transformed3F2& t, const Tolerance& tol,
                                         TailCorrection tc = TailCorrection::off) {
    const double pref = gamma_ratio_eval(t.prefactor);
    SeriesResult r = sum_3f2_unit(t.params, tol, tc);
    r.value *= pref;
    r.tail_bound *= std::fabs(pref);
    return r;
}

}  // namespace hyperg
