#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hyperg/gamma.hpp"
#include "hyperg/gamma_ratio.hpp"
#include "hyperg/hyp2f1_kernel.hpp"
#include "hyperg/signed_log.hpp"
#include "reference_values.hpp"

using Catch::Approx;
using namespace hyperg;

TEST_CASE("log gamma matches frozen references on the positive axis") {
    CHECK(log_gamma_signed(0.5).log_magnitude == Approx(refvals::lg_half).epsilon(1e-14));
    CHECK(log_gamma_signed(0.01).log_magnitude == Approx(refvals::lg_0p01).epsilon(1e-14));
    CHECK(log_gamma_signed(25.3).log_magnitude == Approx(refvals::lg_25p3).epsilon(1e-14));
    CHECK(log_gamma_signed(169.5).log_magnitude == Approx(refvals::lg_169p5).epsilon(1e-14));
    CHECK(log_gamma_signed(1.0).sign == 1);
    CHECK(log_gamma_signed(1.0).log_magnitude == Approx(0.0).margin(1e-14));
    CHECK(log_gamma_signed(2.0).log_magnitude == Approx(0.0).margin(1e-14));
}

TEST_CASE("log gamma reflection carries magnitude and sign") {
    const auto a = log_gamma_signed(-0.5);
    CHECK(a.log_magnitude == Approx(refvals::lg_neg_half).epsilon(1e-14));
    CHECK(a.sign == -1);
    const auto b = log_gamma_signed(-3.7);
    CHECK(b.log_magnitude == Approx(refvals::lg_neg_3p7).epsilon(1e-13));
    CHECK(b.sign == +1);
    const auto c = log_gamma_signed(-12.2);
    CHECK(c.log_magnitude == Approx(refvals::lg_neg_12p2).epsilon(1e-13));
    CHECK(c.sign == -1);
}

TEST_CASE("log gamma throws at poles") {
    CHECK_THROWS_AS(log_gamma_signed(0.0), PoleError);
    CHECK_THROWS_AS(log_gamma_signed(-1.0), PoleError);
    CHECK_THROWS_AS(log_gamma_signed(-41.0), PoleError);
}

TEST_CASE("gamma recurrence holds across the reflection seam") {
    // Gamma(x+1) = x Gamma(x), checked in log space at awkward points.
    for (double x : {-8.6, -2.25, -0.75, 0.2, 3.8, 41.5}) {
        const auto lhs = log_gamma_signed(x + 1.0);
        const auto rhs = log_gamma_signed(x) * SignedLogValue::from_value(x);
        CHECK(lhs.log_magnitude == Approx(rhs.log_magnitude).margin(1e-12));
        CHECK(lhs.sign == rhs.sign);
    }
}

TEST_CASE("pochhammer products, including exact zeros") {
    CHECK(pochhammer(3.0, 0) == 1.0);
    CHECK(pochhammer(3.0, 4) == Approx(3.0 * 4.0 * 5.0 * 6.0));
    CHECK(pochhammer(-3.0, 4) == 0.0);
    CHECK(pochhammer(-3.0, 3) == Approx(-6.0));
    CHECK(pochhammer(0.5, 3) == Approx(0.5 * 1.5 * 2.5));
}

TEST_CASE("signed log values round-trip and multiply") {
    const auto v = SignedLogValue::from_value(-2.5);
    CHECK(v.sign == -1);
    CHECK(v.value() == Approx(-2.5).epsilon(1e-14));
    CHECK(SignedLogValue::from_value(0.0).is_zero());
    CHECK(SignedLogValue::zero().value() == 0.0);
    const auto prod = SignedLogValue::from_value(-3.0) * SignedLogValue::from_value(-7.0);
    CHECK(prod.value() == Approx(21.0).epsilon(1e-14));
    const auto quot = SignedLogValue::from_value(10.0) / SignedLogValue::from_value(-4.0);
    CHECK(quot.value() == Approx(-2.5).epsilon(1e-14));
    CHECK((SignedLogValue::zero() * SignedLogValue::from_value(5.0)).is_zero());
}

TEST_CASE("gamma ratio evaluates against the frozen reference") {
    const GammaRatio r{{2.5, 1.5}, {2.0, 2.0}};
    CHECK(gamma_ratio_eval(r) == Approx(refvals::gr_2p5_1p5_over_2_2).epsilon(1e-14));
    // Mixed-sign arguments: Gamma(-0.5)Gamma(0.5) / Gamma(1) = -2 pi.
    const GammaRatio m{{-0.5, 0.5}, {1.0}};
    CHECK(gamma_ratio_eval(m) == Approx(-2.0 * detail::pi).epsilon(1e-13));
}

TEST_CASE("digamma matches frozen references") {
    CHECK(detail::digamma(0.3) == Approx(refvals::psi_0p3).epsilon(1e-13));
    CHECK(detail::digamma(1.0) == Approx(refvals::psi_1).epsilon(1e-13));
    CHECK(detail::digamma(7.7) == Approx(refvals::psi_7p7).epsilon(1e-13));
    CHECK(detail::digamma(-2.3) == Approx(refvals::psi_neg_2p3).epsilon(1e-13));
    CHECK(detail::digamma(12.5) == Approx(refvals::psi_12p5).epsilon(1e-13));
    CHECK_THROWS_AS(detail::digamma(0.0), PoleError);
    CHECK_THROWS_AS(detail::digamma(-6.0), PoleError);
}

TEST_CASE("digamma recurrence psi(x+1) = psi(x) + 1/x") {
    for (double x : {0.1, 0.9, 3.3, -1.7, -10.4}) {
        CHECK(detail::digamma(x + 1.0) ==
              Approx(detail::digamma(x) + 1.0 / x).margin(1e-11));
    }
}
