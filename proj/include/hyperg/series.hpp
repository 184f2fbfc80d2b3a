#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hyperg/errors.hpp"
#include "hyperg/params.hpp"

namespace hyperg {

struct Tolerance {
    double rel = 1e-10;
    double abs = 1e-12;
    std::int64_t max_terms = 2'000'000;
};

// Whether unit-argument sums may add a fitted algebraic tail estimate to the
// partial sum. Off gives the bare partial-sum semantics; on is required when
// the target accuracy is out of reach of any affordable bare partial sum
// (terms decay like n^(-1-s), so 1e-10 at s near 0.5 is ~1e20 bare terms).
enum class TailCorrection { off, on };

struct SeriesResult {
    double value = 0.0;
    std::int64_t terms_used = 0;
    double tail_bound = 0.0;          // bound on the truncation error of value
    bool converged = false;
    bool terminated_exactly = false;  // finite sum: tail_bound is exactly zero
    bool tail_corrected = false;      // a fitted tail estimate was added to value
};

namespace detail {

inline void validate(const Tolerance& tol) {
    if (!(tol.rel >= 1e-15))
        throw DomainError("relative tolerance must be >= 1e-15 (doubles cannot do better)");
    if (!(tol.abs >= 0.0)) throw DomainError("absolute tolerance must be >= 0");
    if (tol.max_terms < 1) throw DomainError("max_terms must be >= 1");
}

// Neumaier-compensated accumulator; keeps summation rounding at O(eps * |S|)
// even over millions of terms.
struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        const double t = s + x;
        if (std::fabs(s) >= std::fabs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double get() const { return s + c; }
};

// Hurwitz zeta tail sum(k>=0) (M+k)^(-w) for w > 1, via Euler-Maclaurin with
// Bernoulli terms through B6. For M >= 64 the first omitted term is below
// 1e-18 relative, far under anything the series engine needs.
inline double hurwitz_zeta_tail(double w, double M) {
    const double Mw = std::pow(M, -w);
    const double inv = 1.0 / M;
    double v = M * Mw / (w - 1.0) + 0.5 * Mw;
    v += w * Mw * inv / 12.0;
    v -= w * (w + 1.0) * (w + 2.0) * Mw * inv * inv * inv / 720.0;
    v += w * (w + 1.0) * (w + 2.0) * (w + 3.0) * (w + 4.0) * Mw * inv * inv * inv * inv * inv /
         30240.0;
    return v;
}

// Solves a 4x4 linear system in place by Gaussian elimination with partial
// pivoting. Returns false on a numerically singular pivot.
inline bool solve4(double a[4][4], double b[4]) {
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        if (std::fabs(a[piv][col]) < 1e-12) return false;
        if (piv != col) {
            for (int k = 0; k < 4; ++k) std::swap(a[piv][k], a[col][k]);
            std::swap(b[piv], b[col]);
        }
        for (int r = col + 1; r < 4; ++r) {
            const double f = a[r][col] / a[col][col];
            for (int k = col; k < 4; ++k) a[r][k] -= f * a[col][k];
            b[r] -= f * b[col];
        }
    }
    for (int r = 3; r >= 0; --r) {
        for (int k = r + 1; k < 4; ++k) b[r] -= a[r][k] * b[k];
        b[r] /= a[r][r];
    }
    return true;
}

// Fits t_n ~ n^(-1-s) (C0 + C1/n + C2/n^2 + C3/n^3) through four sampled
// terms and returns sum(k>N) of the model, i.e. the estimated tail beyond
// index N = nv[0]. tv[j] is the term at index nv[j]; nv descends from N.
// crude_bound is the first-order tail bound at N, used as a sanity ceiling.
inline std::optional<double> fit_algebraic_tail(const double tv[4], const double nv[4], double s,
                                                double crude_bound) {
    // The asymptotic regime must be established: same sign, |t| shrinking.
    if (tv[0] == 0.0) return std::nullopt;
    for (int j = 0; j < 3; ++j) {
        if (tv[j] * tv[j + 1] <= 0.0) return std::nullopt;
        if (!(std::fabs(tv[j]) < std::fabs(tv[j + 1]))) return std::nullopt;
    }
    // Scale the expansion variable to v = N/n in [1, 1.6] so the Vandermonde
    // system is well conditioned; then C_k = C'_k N^k.
    double a[4][4];
    double u[4];
    for (int j = 0; j < 4; ++j) {
        const double v = nv[0] / nv[j];
        a[j][0] = 1.0;
        a[j][1] = v;
        a[j][2] = v * v;
        a[j][3] = v * v * v;
        u[j] = tv[j] * std::exp((1.0 + s) * std::log(nv[j]));
    }
    if (!solve4(a, u)) return std::nullopt;
    const double M = nv[0] + 1.0;
    double tail = 0.0, npow = 1.0;
    for (int k = 0; k < 4; ++k) {
        tail += u[k] * npow * hurwitz_zeta_tail(1.0 + s + k, M);
        npow *= nv[0];
    }
    if (!std::isfinite(tail) || std::fabs(tail) > 2.0 * crude_bound + 1e-300) return std::nullopt;
    return tail;
}

// Shared engine for unit-argument series. term(n) returns the n-th term and
// is called with consecutive n starting at 0, so stateful recurrence-based
// generators are fine. spec.s is the decay exponent (terms ~ n^(-1-s));
// spec.terminates_at, when set, is the index of the last nonzero term and the
// sum is then computed exactly with no early stop. spec.param_scale delays
// tail fitting until n is well past the largest parameter magnitude, where
// the algebraic tail model is valid.
struct UnitSeriesSpec {
    double s = 0.0;
    std::optional<std::int64_t> terminates_at;
    double param_scale = 1.0;
};

template <class TermFn>
SeriesResult sum_unit_series(TermFn&& term, const UnitSeriesSpec& spec, const Tolerance& tol,
                             TailCorrection tc) {
    const auto& m = spec.terminates_at;
    const double inf = std::numeric_limits<double>::infinity();

    KahanSum sum;
    double t = term(0);
    sum.add(t);
    if (m && *m == 0) return {sum.get(), 1, 0.0, true, true, false};

    std::vector<double> snap;  // term value at every index divisible by 32
    if (tc == TailCorrection::on && !m) snap.push_back(t);

    std::int64_t first_cp = 1024;
    while (first_cp < 10.0 * spec.param_scale && first_cp < (std::int64_t{1} << 20)) first_cp <<= 1;

    double prev_abs = std::fabs(t);
    int shrink_streak = 0;
    std::optional<double> prev_est;
    double last_delta = inf;
    double crude = inf;

    for (std::int64_t n = 1; n < tol.max_terms; ++n) {
        t = term(n);
        sum.add(t);
        if (tc == TailCorrection::on && !m && n % 32 == 0) snap.push_back(t);
        if (m && n == *m) return {sum.get(), n + 1, 0.0, true, true, false};
        // A term underflowing to exact zero pins every later term at zero.
        if (t == 0.0 && !m) return {sum.get(), n + 1, 0.0, true, false, false};

        const double abs_t = std::fabs(t);
        shrink_streak = abs_t < prev_abs ? shrink_streak + 1 : 0;
        prev_abs = abs_t;
        if (m || shrink_streak < 3) continue;

        const double tolmax = std::fmax(tol.abs, tol.rel * std::fabs(sum.get()));
        // First-order tail bound: for t_k ~ C k^(-1-s) the remainder beyond n
        // is about t_n * n / s.
        crude = abs_t * static_cast<double>(n + 1) / spec.s;

        if (tc == TailCorrection::off) {
            if (crude <= tolmax) return {sum.get(), n + 1, crude, true, false, false};
            continue;
        }
        // Corrected mode: when the crude bound is already deep inside the
        // budget, adding a fitted tail would change nothing measurable.
        if (n >= 64 && crude <= 0.05 * tolmax)
            return {sum.get(), n + 1, crude, true, false, false};

        // Fit checkpoints at powers of two; accept once two consecutive
        // corrected estimates agree within half the budget.
        if (n >= first_cp && (n & (n - 1)) == 0) {
            const double nv[4] = {static_cast<double>(n), static_cast<double>(n - n / 8),
                                  static_cast<double>(n - n / 4), static_cast<double>(n - 3 * (n / 8))};
            const double tv[4] = {t, snap[static_cast<std::size_t>((n - n / 8) / 32)],
                                  snap[static_cast<std::size_t>((n - n / 4) / 32)],
                                  snap[static_cast<std::size_t>((n - 3 * (n / 8)) / 32)]};
            if (auto tail = fit_algebraic_tail(tv, nv, spec.s, crude)) {
                const double est = sum.get() + *tail;
                if (prev_est) {
                    last_delta = std::fabs(est - *prev_est);
                    if (last_delta <= 0.5 * tolmax) {
                        const double bound =
                            std::fmax(last_delta, 4.0 * std::numeric_limits<double>::epsilon() *
                                                      std::fabs(est));
                        return {est, n + 1, bound, true, false, true};
                    }
                }
                prev_est = est;
            }
        }
    }

    // Term budget exhausted: report the best available estimate honestly.
    if (tc == TailCorrection::on && prev_est)
        return {*prev_est, tol.max_terms, std::fmax(last_delta, crude), false, false, true};
    return {sum.get(), tol.max_terms, crude, false, false, false};
}

// Engine for 0 < x < 1: the term ratio tends to x, so a geometric bound
// closes the tail. ratio(n) must return t_{n+1}/t_n including the x factor.
// Terminating sums are evaluated in full (exactness over speed).
template <class RatioFn>
SeriesResult sum_power_series(RatioFn&& ratio, double x, std::optional<std::int64_t> m,
                              const Tolerance& tol) {
    KahanSum sum;
    double t = 1.0;
    sum.add(t);
    if (m && *m == 0) return {sum.get(), 1, 0.0, true, true, false};

    double prev_abs = 1.0;
    int shrink_streak = 0;
    double q = 1.0;
    for (std::int64_t n = 1; n < tol.max_terms; ++n) {
        const double r = ratio(n - 1);
        t *= r;
        sum.add(t);
        if (m && n == *m) return {sum.get(), n + 1, 0.0, true, true, false};
        if (t == 0.0 && !m) return {sum.get(), n + 1, 0.0, true, false, false};

        const double abs_t = std::fabs(t);
        shrink_streak = abs_t < prev_abs ? shrink_streak + 1 : 0;
        prev_abs = abs_t;
        if (m || shrink_streak < 3) continue;

        // The ratio decreases toward x once past the parameter transient, so
        // max(current ratio, x) bounds all later ratios; 1.5 covers slack.
        q = std::fmax(std::fabs(r), x);
        if (q >= 1.0) continue;
        const double tail = 1.5 * abs_t * q / (1.0 - q);
        if (tail <= std::fmax(tol.abs, tol.rel * std::fabs(sum.get())))
            return {sum.get(), n + 1, tail, true, false, false};
    }
    const double tail = q < 1.0 ? 1.5 * std::fabs(t) * q / (1.0 - q)
                                : std::numeric_limits<double>::infinity();
    return {sum.get(), tol.max_terms, tail, false, false, false};
}

}  // namespace detail

// Gauss series sum(n) (a)_n (b)_n / ((c)_n n!) x^n for x in [0, 1].
// At x = 1 a positive excess c-a-b is required unless the series terminates.
// tail correction applies only at x = 1 (geometric tails need no model).
inline SeriesResult sum_2f1(const Params2F1& p, double x, const Tolerance& tol,
                            TailCorrection tc = TailCorrection::off) {
    detail::validate(tol);
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError("argument x must lie in [0, 1], got " + std::to_string(x));

    const auto m = detail::termination_order<2>({p.a, p.b});
    if (const auto pole = detail::lower_pole_index(p.c); pole && (!m || *pole <= *m))
        throw LowerPoleError(p.c, *pole);

    if (x == 0.0) return {1.0, 1, 0.0, true, true, false};

    if (x < 1.0) {
        return detail::sum_power_series(
            [&](std::int64_t n) {
                const double dn = static_cast<double>(n);
                return (p.a + dn) * (p.b + dn) * x / ((p.c + dn) * (1.0 + dn));
            },
            x, m, tol);
    }

    const double s = excess_2f1(p);
    if (!m && s <= 0.0)
        throw DivergenceError("unit-argument series diverges: excess c - a - b = " +
                              std::to_string(s));
    detail::UnitSeriesSpec spec{s, m,
                                std::fmax(std::fabs(p.a), std::fmax(std::fabs(p.b), std::fabs(p.c)))};
    double t = 1.0;
    return detail::sum_unit_series(
        [&, t](std::int64_t n) mutable {
            if (n == 0) return t = 1.0;
            const double dn = static_cast<double>(n - 1);
            t *= (p.a + dn) * (p.b + dn) / ((p.c + dn) * (1.0 + dn));
            return t;
        },
        spec, tol, tc);
}

// Generalized series at unit argument. Requires excess > 0 unless the series
// terminates; excess below 0.05 is rejected as too slow to sum directly
// (a transformed representation with a larger excess should be used, see
// choose_representation in transforms.hpp).
inline SeriesResult sum_3f2_unit(const Params3F2& p, const Tolerance& tol,
                                 TailCorrection tc = TailCorrection::off) {
    detail::validate(tol);

    const auto m = detail::termination_order<3>({p.a, p.b, p.c});
    for (double lo : {p.d, p.e})
        if (const auto pole = detail::lower_pole_index(lo); pole && (!m || *pole <= *m))
            throw LowerPoleError(lo, *pole);

    const double s = excess_3f2(p);
    if (!m) {
        if (s <= 0.0)
            throw DivergenceError("unit-argument series diverges: excess d+e-a-b-c = " +
                                  std::to_string(s));
        if (s < 0.05)
            throw SlowConvergenceError(
                "excess d+e-a-b-c = " + std::to_string(s) +
                " is below 0.05; evaluate through a transformed representation instead");
    }

    double scale = 0.0;
    for (double v : {p.a, p.b, p.c, p.d, p.e}) scale = std::fmax(scale, std::fabs(v));
    detail::UnitSeriesSpec spec{s, m, scale};
    double t = 1.0;
    return detail::sum_unit_series(
        [&, t](std::int64_t n) mutable {
            if (n == 0) return t = 1.0;
            const double dn = static_cast<double>(n - 1);
            t *= (p.a + dn) * (p.b + dn) * (p.c + dn) / ((p.d + dn) * (p.e + dn) * (1.0 + dn));
            return t;
        },
        spec, tol, tc);
}

}  // namespace hyperg
