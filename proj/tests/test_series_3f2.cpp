#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hyperg/exact.hpp"
#include "hyperg/series.hpp"
#include "reference_values.hpp"

using Catch::Approx;
using namespace hyperg;

namespace {
const Tolerance tight{1e-13, 1e-14};
}

TEST_CASE("unit-argument sums match frozen references across excess regimes") {
    CHECK(sum_3f2_unit({0.5, 0.6, 0.7, 2.0, 2.5}, tight, TailCorrection::on).value ==
          Approx(refvals::f32_reference).epsilon(2e-12));
    CHECK(sum_3f2_unit({0.5, 0.5, 0.5, 1.5, 1.2}, tight, TailCorrection::on).value ==
          Approx(refvals::f32_s1p2).epsilon(2e-12));
    CHECK(sum_3f2_unit({1.0, 1.2, 0.8, 1.9, 1.65}, tight, TailCorrection::on).value ==
          Approx(refvals::f32_s0p55).epsilon(2e-11));
    CHECK(sum_3f2_unit({1.1, 0.9, 1.3, 1.8, 1.8}, tight, TailCorrection::on).value ==
          Approx(refvals::f32_s0p3).epsilon(2e-11));
}

TEST_CASE("negative non-integer upper parameter gives an alternating series") {
    CHECK(sum_3f2_unit({-0.5, 1.2, 0.7, 2.2, 1.9}, tight, TailCorrection::on).value ==
          Approx(refvals::f32_alternating).epsilon(2e-12));
}

TEST_CASE("tail correction closes the gap the bare sum cannot") {
    // Excess 1: bare terms decay like n^-2, so 2e6 terms only buy ~5e-7.
    const Params3F2 p{1.0, 1.0, 1.0, 2.0, 2.0};
    const SeriesResult bare = sum_3f2_unit(p, Tolerance{1e-13, 1e-14, 2'000'000});
    const SeriesResult corr =
        sum_3f2_unit(p, Tolerance{1e-13, 1e-14, 2'000'000}, TailCorrection::on);
    CHECK(std::fabs(bare.value - refvals::zeta2) < 1e-6);
    CHECK(std::fabs(bare.value - refvals::zeta2) > 1e-9);
    CHECK_FALSE(bare.tail_corrected);
    CHECK(std::fabs(corr.value - refvals::zeta2) < 1e-10);
    CHECK(corr.tail_corrected);
    CHECK(corr.converged);
    CHECK(corr.terms_used < bare.terms_used);
}

TEST_CASE("terminating series agrees with the exact rational oracle") {
    const SeriesResult r = sum_3f2_unit({-3.0, 0.5, 2.0 / 3.0, 1.25, 7.0 / 3.0}, tight);
    const Rational exact = sum_3f2_terminating_exact(
        {Rational{-3}, Rational::parse("1/2"), Rational::parse("2/3"), Rational::parse("5/4"),
         Rational::parse("7/3")},
        3);
    CHECK(r.terminated_exactly);
    CHECK(r.value == Approx(exact.to_double()).epsilon(1e-14));
    CHECK(exact.to_string() ==
          std::string(refvals::terminating_exact_num) + "/" + refvals::terminating_exact_den);
}

TEST_CASE("non-positive excess is rejected unless the series terminates") {
    CHECK_THROWS_AS(sum_3f2_unit({1.0, 1.0, 1.0, 1.5, 1.5}, tight), DivergenceError);
    CHECK_THROWS_AS(sum_3f2_unit({1.0, 1.0, 1.0, 1.2, 1.2}, tight), DivergenceError);
    CHECK_NOTHROW(sum_3f2_unit({-2.0, 3.0, 3.0, 1.5, 1.5}, tight));
}

TEST_CASE("barely positive excess is reported as too slow") {
    CHECK_THROWS_AS(sum_3f2_unit({1.0, 1.0, 1.0, 1.51, 1.52}, tight), SlowConvergenceError);
}

TEST_CASE("lower-parameter poles are diagnosed with their index") {
    try {
        sum_3f2_unit({0.5, 0.6, 0.7, -2.0, 2.5}, tight);
        FAIL("expected a lower-pole error");
    } catch (const LowerPoleError& e) {
        CHECK(e.parameter == -2.0);
        CHECK(e.index == 3);
    }
}

TEST_CASE("upper-parameter order does not change the sum materially") {
    const double v1 = sum_3f2_unit({0.5, 0.6, 0.7, 2.0, 2.5}, tight, TailCorrection::on).value;
    const double v2 = sum_3f2_unit({0.7, 0.5, 0.6, 2.5, 2.0}, tight, TailCorrection::on).value;
    CHECK(v1 == Approx(v2).epsilon(1e-12));
}

TEST_CASE("in-band budget exhaustion keeps the best estimate") {
    const SeriesResult r = sum_3f2_unit({0.5, 0.6, 0.7, 2.0, 2.5}, Tolerance{1e-13, 1e-14, 100});
    CHECK_FALSE(r.converged);
    CHECK(std::fabs(r.value - refvals::f32_reference) <= 10.0 * r.tail_bound + 1e-12);
}
