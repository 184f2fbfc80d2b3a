#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include "hyperg/errors.hpp"
#include "hyperg/gamma.hpp"
#include "hyperg/params.hpp"
#include "hyperg/series.hpp"
#include "hyperg/signed_log.hpp"

// Gauss-series evaluation tuned for quadrature integrands: the argument may
// sit arbitrarily close to 1 (the caller supplies 1-x explicitly, so no
// precision is lost forming it), and a growing factor (1-x)^sigma is returned
// symbolically so the integrand can fuse it with its own endpoint powers
// instead of overflowing.

namespace hyperg::detail {

inline double cot_pi(double x) {
    // cot(pi x) for non-integer x, reduced to a distance from the nearest
    // integer so large arguments keep full precision.
    const double r = x - std::floor(x);
    const double mu = std::ceil(x) - x;
    if (r <= 0.5) return std::cos(pi * r) / std::sin(pi * r);
    return -std::cos(pi * mu) / std::sin(pi * mu);
}

// psi(x) by recurrence into x >= 12, then the Bernoulli asymptotic series
// through x^-14; x < 1/2 goes through the reflection psi(1-x) - pi cot(pi x).
inline double digamma(double x) {
    if (is_nonpositive_integer(x)) throw PoleError(x);
    double acc = 0.0;
    if (x < 0.5) {
        acc = -pi * cot_pi(x);
        x = 1.0 - x;
    }
    while (x < 12.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x, inv2 = inv * inv;
    const double tail =
        inv2 *
        (1.0 / 12.0 -
         inv2 * (1.0 / 120.0 -
                 inv2 * (1.0 / 252.0 -
                         inv2 * (1.0 / 240.0 -
                                 inv2 * (1.0 / 132.0 -
                                         inv2 * (691.0 / 32760.0 - inv2 * (1.0 / 12.0)))))));
    return std::log(x) - 0.5 * inv - tail + acc;
}

// value = factor * (1-x)^omx_exponent
struct Hyp2F1Factor {
    double factor = 0.0;
    double omx_exponent = 0.0;
};

inline double hyp2f1_series_direct(double a, double b, double c, double x, double eps,
                                   std::optional<std::int64_t> m) {
    const Tolerance ktol{std::fmax(eps, 1e-15), 0.0, 100000};
    const SeriesResult r = sum_power_series(
        [&](std::int64_t n) {
            const double dn = static_cast<double>(n);
            return (a + dn) * (b + dn) * x / ((c + dn) * (1.0 + dn));
        },
        x, m, ktol);
    if (!r.converged) throw Error("gauss kernel series did not converge");
    return r.value;
}

// Connection formula onto series in w = 1-x, for excess sigma = c-a-b farther
// than the snapping window from every integer:
//   F(a,b;c;x) = A F(a,b;1-sigma;w) + B w^sigma F(c-a,c-b;1+sigma;w)
//   A = Gamma(c)Gamma(sigma)/(Gamma(c-a)Gamma(c-b)),
//   B = Gamma(c)Gamma(-sigma)/(Gamma(a)Gamma(b)).
// The two leading terms cancel to O(sigma - round(sigma)), so accuracy
// degrades like eps / distance-to-integer; the snapping window bounds that.
inline double hyp2f1_connection(double a, double b, double c, double sigma, double w, double eps) {
    const SignedLogValue gc = log_gamma_signed(c);
    SignedLogValue A = SignedLogValue::zero();
    if (!is_nonpositive_integer(c - a) && !is_nonpositive_integer(c - b))
        A = gc * log_gamma_signed(sigma) / (log_gamma_signed(c - a) * log_gamma_signed(c - b));
    SignedLogValue B = SignedLogValue::zero();
    if (!is_nonpositive_integer(a) && !is_nonpositive_integer(b))
        B = gc * log_gamma_signed(-sigma) / (log_gamma_signed(a) * log_gamma_signed(b));

    const Tolerance ktol{std::fmax(eps, 1e-15), 0.0, 100000};
    double s1 = 0.0, s2 = 0.0;
    if (!A.is_zero()) {
        const SeriesResult r = sum_power_series(
            [&](std::int64_t n) {
                const double dn = static_cast<double>(n);
                return (a + dn) * (b + dn) * w / ((1.0 - sigma + dn) * (1.0 + dn));
            },
            w, std::nullopt, ktol);
        if (!r.converged) throw Error("gauss kernel connection series did not converge");
        s1 = r.value;
    }
    if (!B.is_zero()) {
        const SeriesResult r = sum_power_series(
            [&](std::int64_t n) {
                const double dn = static_cast<double>(n);
                return (c - a + dn) * (c - b + dn) * w / ((1.0 + sigma + dn) * (1.0 + dn));
            },
            w, std::nullopt, ktol);
        if (!r.converged) throw Error("gauss kernel connection series did not converge");
        s2 = r.value;
    }
    const double wpow = std::exp(sigma * std::log(w));
    return A.value() * s1 + B.value() * wpow * s2;
}

// Logarithmic connection form for sigma within the snapping window of the
// integer m >= 0. The series structure uses m exactly; gamma and digamma
// factors use the actual parameters.
inline double hyp2f1_log_form(double a, double b, double c, long m, double w, double eps) {
    const double lw = std::log(w);
    const SignedLogValue gc = log_gamma_signed(c);
    const SignedLogValue over_ab = gc / (log_gamma_signed(a) * log_gamma_signed(b));

    if (m == 0) {
        double coef = 1.0;
        double pk = digamma(1.0), pa = digamma(a), pb = digamma(b);
        KahanSum s;
        for (int k = 0; k < 400; ++k) {
            const double bracket = 2.0 * pk - pa - pb - lw;
            s.add(coef * bracket);
            if (k >= 3 && std::fabs(coef) * (std::fabs(bracket) + std::fabs(lw) + 4.0) <=
                              eps * (std::fabs(s.get()) + 1e-300))
                break;
            const double dk = static_cast<double>(k);
            coef *= (a + dk) * (b + dk) * w / ((dk + 1.0) * (dk + 1.0));
            pk += 1.0 / (dk + 1.0);
            pa += 1.0 / (a + dk);
            pb += 1.0 / (b + dk);
        }
        return over_ab.value() * s.get();
    }

    // finite head: Gamma(m)Gamma(c)/(Gamma(a+m)Gamma(b+m)) * sum(k<m)
    const double md = static_cast<double>(m);
    const SignedLogValue head =
        (log_gamma_signed(md) * gc) / (log_gamma_signed(a + md) * log_gamma_signed(b + md));
    KahanSum s1;
    double coef = 1.0;
    for (long k = 0; k < m; ++k) {
        s1.add(coef);
        const double dk = static_cast<double>(k);
        if (k + 1 < m) coef *= (a + dk) * (b + dk) * w / ((dk + 1.0) * (dk + 1.0 - md));
    }

    // log tail: -(-1)^m Gamma(c)/(Gamma(a)Gamma(b)) w^m * sum(k>=0)
    const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
    const double wm = std::exp(md * lw);
    const double c2 = -sign_m * over_ab.value() * wm;
    KahanSum s2;
    if (c2 != 0.0) {
        double coef2 = std::exp(-lanczos_ln_gamma_pos(md + 1.0));
        double pk = digamma(1.0), pkm = digamma(md + 1.0);
        double pa = digamma(a + md), pb = digamma(b + md);
        for (int k = 0; k < 400; ++k) {
            const double bracket = lw - pk - pkm + pa + pb;
            s2.add(coef2 * bracket);
            if (k >= 3 && std::fabs(coef2) * (std::fabs(bracket) + std::fabs(lw) + 4.0) <=
                              eps * (std::fabs(s2.get()) + 1e-300))
                break;
            const double dk = static_cast<double>(k);
            coef2 *= (a + md + dk) * (b + md + dk) * w / ((dk + 1.0) * (dk + md + 1.0));
            pk += 1.0 / (dk + 1.0);
            pkm += 1.0 / (dk + md + 1.0);
            pa += 1.0 / (a + md + dk);
            pb += 1.0 / (b + md + dk);
        }
    }
    return head.value() * s1.get() + c2 * s2.get();
}

inline double hyp2f1_near_unit(double a, double b, double c, double x, double w, double eps) {
    const double sigma = c - a - b;  // >= -1e-8 by dispatch
    // Very large excess: terms decay so fast the plain series wins at any x.
    if (sigma > 40.0) {
        const Tolerance ktol{std::fmax(eps, 1e-15), 0.0, 100000};
        double t = 1.0;
        const SeriesResult r = sum_unit_series(
            [&, t](std::int64_t n) mutable {
                if (n == 0) return t = 1.0;
                const double dn = static_cast<double>(n - 1);
                t *= (a + dn) * (b + dn) * x / ((c + dn) * (1.0 + dn));
                return t;
            },
            UnitSeriesSpec{sigma, std::nullopt,
                           std::fmax(std::fabs(a), std::fmax(std::fabs(b), std::fabs(c)))},
            ktol, TailCorrection::off);
        if (!r.converged) throw Error("gauss kernel series did not converge");
        return r.value;
    }
    const long m = std::lround(sigma);
    if (std::fabs(sigma - static_cast<double>(m)) <= 1e-8)
        return hyp2f1_log_form(a, b, c, m, w, eps);
    return hyp2f1_connection(a, b, c, sigma, w, eps);
}

// Entry point used by the integrals: evaluates F(a,b;c;x) given both x and
// omx = 1-x (each in (0,1)), returning a bounded factor and the exponent of
// (1-x) split off when the excess is negative.
inline Hyp2F1Factor hyp2f1_for_quadrature(double a, double b, double c, double x, double omx,
                                          double eps = 5e-16) {
    const auto m = termination_order<2>({a, b});
    if (const auto pole = lower_pole_index(c); pole && (!m || *pole <= *m))
        throw LowerPoleError(c, *pole);
    if (m) return {hyp2f1_series_direct(a, b, c, x, eps, m), 0.0};
    if (x <= 0.75) return {hyp2f1_series_direct(a, b, c, x, eps, std::nullopt), 0.0};

    const double sigma = c - a - b;
    if (sigma < -1e-8) {
        // F(a,b;c;x) = (1-x)^sigma F(c-a,c-b;c;x); the reflected excess is
        // -sigma > 0, so the reflected factor stays bounded toward x = 1.
        return {hyp2f1_near_unit(c - a, c - b, c, x, omx, eps), sigma};
    }
    return {hyp2f1_near_unit(a, b, c, x, omx, eps), 0.0};
}

}  // namespace hyperg::detail
