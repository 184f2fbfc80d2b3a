#pragma once

#include <cmath>
#include <string>

#include "hyperg/errors.hpp"
#include "hyperg/gamma_ratio.hpp"
#include "hyperg/hyp2f1_kernel.hpp"
#include "hyperg/params.hpp"
#include "hyperg/quadrature.hpp"
#include "hyperg/series.hpp"

namespace hyperg {

// Euler beta function computed by quadrature, int x^(alpha-1) (1-x)^(beta-1) dx.
// This is the calibration target for the quadrature module: it exercises both
// endpoint singularities and has an independent closed form through the gamma
// module for tests to compare against.
inline double beta_integral(double alpha, double beta, const QuadratureConfig& cfg) {
    if (!(alpha > 0.0))
        throw PreconditionError("beta integral requires alpha > 0, got " + std::to_string(alpha));
    if (!(beta > 0.0))
        throw PreconditionError("beta integral requires beta > 0, got " + std::to_string(beta));
    const QuadResult q = detail::tanh_sinh_unit(
        [&](double x, double omx) {
            return std::exp((alpha - 1.0) * std::log(x) + (beta - 1.0) * std::log(omx));
        },
        cfg);
    if (!q.converged) throw AccuracyNotReached(q.value, q.error_estimate);
    return q.value;
}

// Generalized unit-argument series evaluated through its integral
// representation: an independent route from the direct series, sharing no
// term recurrence with it.
//
//   F = Gamma(e)/(Gamma(c)Gamma(e-c)) *
//       int_0^1 x^(c-1) (1-x)^(e-c-1) K(a,b;d;x) dx
//
// When the kernel excess d-a-b is not positive, the kernel is evaluated in
// its Euler-transformed form K = (1-x)^(d-a-b) K(d-a,d-b;d;x) and the
// exponent folds into the endpoint weight (d-a-b + e-c-1 = s-1 > -1, so the
// integral stays proper). Preconditions: c > 0, e-c > 0, excess s > 0.
inline double euler_integral_3f2(const Params3F2& p, const QuadratureConfig& cfg,
                                 const Tolerance& tol) {
    detail::validate(tol);
    const double s = excess_3f2(p);
    if (!(p.c > 0.0))
        throw PreconditionError("integral representation requires c > 0, got " +
                                std::to_string(p.c));
    if (!(p.e - p.c > 0.0))
        throw PreconditionError("integral representation requires e - c > 0, got " +
                                std::to_string(p.e - p.c));
    if (!(s > 0.0))
        throw PreconditionError("integral representation requires excess d+e-a-b-c > 0, got " +
                                std::to_string(s));

    // Kernel series tolerance: comfortably below the quadrature target.
    const double keps = std::fmax(5e-16, std::fmin(1e-12, tol.rel * 1e-2));

    const bool transformed = !(p.d - p.a - p.b > 0.0);
    const double ka = transformed ? p.d - p.a : p.a;
    const double kb = transformed ? p.d - p.b : p.b;
    const double q_exp = transformed ? s : p.e - p.c;  // endpoint power of (1-x)

    const QuadResult q = detail::tanh_sinh_unit(
        [&](double x, double omx) {
            const detail::Hyp2F1Factor kf =
                detail::hyp2f1_for_quadrature(ka, kb, p.d, x, omx, keps);
            return kf.factor * std::exp((p.c - 1.0) * std::log(x) +
                                        (q_exp - 1.0 + kf.omx_exponent) * std::log(omx));
        },
        cfg);

    const double norm = gamma_ratio_eval({{p.e}, {p.c, p.e - p.c}});
    if (!q.converged) throw AccuracyNotReached(norm * q.value, std::fabs(norm) * q.error_estimate);
    return norm * q.value;
}

}  // namespace hyperg
