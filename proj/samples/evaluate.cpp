// Evaluate a unit-argument series three ways: directly, through the
// representation chooser, and against the Gauss closed form for the
// two-parameter-numerator special case.

#include <cstdio>

#include "hyperg/hyperg.hpp"

int main() {
    using namespace hyperg;

    const Params3F2 p{0.5, 0.6, 0.7, 2.0, 2.5};
    const Tolerance tol{1e-12, 1e-13};

    const SeriesResult direct = sum_3f2_unit(p, tol, TailCorrection::on);
    std::printf("direct sum        = %.15g  (%lld terms, tail bound %.2g)\n", direct.value,
                static_cast<long long>(direct.terms_used), direct.tail_bound);

    const Transformed3F2 rep = choose_representation(p);
    const SeriesResult via = evaluate_transformed(rep, tol, TailCorrection::on);
    std::printf("via %-13s = %.15g  (%lld terms)\n", to_string(rep.name), via.value,
                static_cast<long long>(via.terms_used));

    // A series with one unit upper parameter collapses to the Gauss case.
    const Params2F1 q{0.3, 0.4, 2.2};
    const SeriesResult g = sum_2f1(q, 1.0, tol, TailCorrection::on);
    std::printf("gauss series      = %.15g\n", g.value);
    std::printf("gauss closed form = %.15g\n", gauss_sum(q));
    return 0;
}
