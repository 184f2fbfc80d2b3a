#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hyperg/integrals.hpp"
#include "hyperg/series.hpp"
#include "reference_values.hpp"

using Catch::Approx;
using namespace hyperg;

namespace {
const QuadratureConfig qcfg{1e-11, 10};
const Tolerance tight{1e-13, 1e-14};
}

TEST_CASE("beta integral matches frozen references") {
    CHECK(beta_integral(1.3, 2.6, qcfg) == Approx(refvals::beta_1p3_2p6).epsilon(1e-11));
    CHECK(beta_integral(0.2, 5.5, qcfg) == Approx(refvals::beta_0p2_5p5).epsilon(1e-10));
    CHECK(beta_integral(0.5, 0.5, qcfg) == Approx(3.14159265358979324).epsilon(1e-11));
}

TEST_CASE("beta integral preconditions") {
    CHECK_THROWS_AS(beta_integral(0.0, 1.0, qcfg), PreconditionError);
    CHECK_THROWS_AS(beta_integral(1.0, -0.5, qcfg), PreconditionError);
}

TEST_CASE("series integral representation reproduces the direct sum") {
    const Params3F2 p{0.5, 0.6, 0.7, 2.0, 2.5};
    const double integral = euler_integral_3f2(p, qcfg, tight);
    CHECK(integral == Approx(refvals::f32_reference).epsilon(1e-10));
    const double series = sum_3f2_unit(p, tight, TailCorrection::on).value;
    CHECK(std::fabs(integral - series) < 1e-9);
}

TEST_CASE("integral representation in the absorbed-kernel branch") {
    // d - a - b < 0 forces the kernel to be evaluated in transformed form.
    const Params3F2 p{1.2, 1.1, 0.8, 1.9, 1.7};
    REQUIRE(p.d - p.a - p.b < 0.0);
    const double integral = euler_integral_3f2(p, qcfg, tight);
    const double series = sum_3f2_unit(p, tight, TailCorrection::on).value;
    CHECK(integral == Approx(series).margin(1e-9));
}

TEST_CASE("integral representation with a terminating kernel") {
    const Params3F2 p{-2.0, 1.3, 0.9, 2.4, 2.1};
    const double integral = euler_integral_3f2(p, qcfg, tight);
    const double series = sum_3f2_unit(p, tight).value;
    CHECK(integral == Approx(series).margin(1e-10));
}

TEST_CASE("integral representation preconditions") {
    // Third upper parameter must be positive: it is the left endpoint power.
    CHECK_THROWS_AS(euler_integral_3f2({0.5, 0.6, -0.2, 2.0, 2.5}, qcfg, tight),
                    PreconditionError);
    // Second lower must exceed the third upper for the right endpoint.
    CHECK_THROWS_AS(euler_integral_3f2({0.5, 0.6, 2.6, 2.0, 2.5}, qcfg, tight),
                    PreconditionError);
    // Divergent target sum.
    CHECK_THROWS_AS(euler_integral_3f2({1.0, 1.0, 1.0, 1.5, 1.5}, qcfg, tight),
                    PreconditionError);
}
