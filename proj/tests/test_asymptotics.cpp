#include <catch_amalgamated.hpp>

#include <cmath>

#include "hamcount/asymptotics.hpp"
#include "hamcount/exact.hpp"

using namespace hamcount;
using namespace hamcount::asympt;

namespace {

Count uniform_h(int m, int n) {
    return hamiltonian_cycles(Composition(std::vector<int>(static_cast<size_t>(m), n)));
}

}  // namespace

TEST_CASE("stirling log factorial") {
    CHECK(stirling_log_factorial(1) == Catch::Approx(-0.0810615).margin(1e-6));
    CHECK(stirling_log_factorial(10) == Catch::Approx(std::log(3628800.0)).margin(0.01));
    CHECK(stirling_log_factorial(100) ==
          Catch::Approx(factorial(100).log_natural()).margin(0.001));
    CHECK_THROWS_AS(stirling_log_factorial(0), std::domain_error);
}

TEST_CASE("stirling error stays within the classical 1/(12k) bound") {
    for (unsigned long k = 1; k <= 500; ++k) {
        double err = std::fabs(stirling_log_factorial(k) - factorial(k).log_natural());
        CHECK(err <= 1.0 / (12.0 * static_cast<double>(k)) + 1e-9);
    }
}

TEST_CASE("s_asymptotic variants") {
    auto p = s_asymptotic(3, 1, Variant::Paper);
    auto a = s_asymptotic(3, 1, Variant::Alternative);
    CHECK(std::isfinite(p.log_value));
    CHECK(std::isfinite(a.log_value));
    CHECK(p.log_value != a.log_value);
    CHECK_THROWS_AS(s_asymptotic(2, 3, Variant::Paper), std::domain_error);
    CHECK_NOTHROW(s_asymptotic(2, 3, Variant::Alternative));
}

TEST_CASE("s_asymptotic error against exact S_3(7)") {
    Count exact = s_count(Composition({7, 7, 7}));
    CHECK(exact == Count(240288ul));
    for (Variant v : {Variant::Paper, Variant::Alternative}) {
        auto rep = error_report(exact, s_asymptotic(3, 7, v));
        CHECK(rep.relative_defined);
        CHECK(rep.rel_log_error < 0.5);  // same order of magnitude in log space
    }
}

TEST_CASE("h_asymptotic error against table values") {
    Count h37 = uniform_h(3, 7);
    CHECK(h37 == Count::from_string("732443959296000"));
    auto rep = error_report(h37, h_asymptotic(3, 7, Variant::Alternative));
    CHECK(rep.rel_log_error < 0.05);

    Count h41 = uniform_h(4, 1);
    CHECK(h41 == Count(3ul));
    CHECK(std::isfinite(h_asymptotic(4, 1, Variant::Paper).log_value));
    CHECK_THROWS_AS(h_asymptotic(2, 3, Variant::Paper), std::domain_error);
}

TEST_CASE("exact-log and stirling-log estimates agree closely at scale") {
    auto exact_based = h_asymptotic(4, 6, Variant::Paper, false);
    auto stirling_based = h_asymptotic(4, 6, Variant::Paper, true);
    CHECK(std::fabs(exact_based.log_value - stirling_based.log_value) < 0.01);
}

TEST_CASE("master log expansion") {
    double v37 = log_h_expansion(3, 7);
    CHECK(std::isfinite(v37));
    // only the trend is asserted: the remainder is O(log n)
    double exact37 = uniform_h(3, 7).log_natural();
    double exact33 = uniform_h(3, 3).log_natural();
    CHECK(std::fabs(log_h_expansion(3, 7) - exact37) / exact37 <
          std::fabs(log_h_expansion(3, 3) - exact33) / exact33 + 0.05);
    CHECK(std::isfinite(log_h_expansion(3, 1)));
    double exact55 = uniform_h(5, 5).log_natural();
    CHECK(std::fabs(log_h_expansion(5, 5) - exact55) / exact55 < 0.2);
    CHECK_THROWS_AS(log_h_expansion(2, 3), std::domain_error);
}

TEST_CASE("compact log form and fitted constant") {
    // residuals against exact values stabilize; the fit is their mean
    std::vector<std::pair<unsigned long, double>> pts;
    for (int n = 4; n <= 7; ++n)
        pts.emplace_back(static_cast<unsigned long>(n), uniform_h(3, n).log_natural());
    double c3 = fit_compact_constant(3, pts);
    // the bracket-to-log(m!)-1 substitution drifts linearly in n, so the
    // fitted constant only centers the residuals; the band stays a few
    // log units wide over n = 4..7
    double max_resid = 0.0;
    for (auto [n, lg] : pts)
        max_resid = std::max(max_resid, std::fabs(lg - compact_log_form(3, n, c3)));
    CHECK(max_resid < 4.0);
    // without the fit the residuals are not centered
    double sum0 = 0.0;
    for (auto [n, lg] : pts) sum0 += lg - compact_log_form(3, n, 0.0);
    CHECK(std::fabs(sum0 / 4.0 - c3) < 1e-12);
    CHECK(std::isfinite(compact_log_form(4, 1, 0.0)));
    CHECK_THROWS_AS(fit_compact_constant(3, {}), std::invalid_argument);
}

TEST_CASE("ratio estimate against exact ratios") {
    auto exact_ratio = [&](int m, int n) {
        return uniform_h(m, n + 1).log_natural() - uniform_h(m, n).log_natural();
    };
    // exact ratio 463104/1584 ~ 292.4
    CHECK(uniform_h(3, 3) == Count(1584ul));
    CHECK(uniform_h(3, 4) == Count(463104ul));
    CHECK(std::log(ratio_estimate(3, 3)) == Catch::Approx(exact_ratio(3, 3)).margin(1.5));
    // m=3, n=5: exact ratio ~ 1208
    CHECK(std::log(ratio_estimate(3, 5)) == Catch::Approx(exact_ratio(3, 5)).margin(1.5));
    // m=4, n=1: exact ratio 744/3 = 248
    CHECK(uniform_h(4, 2).value() / uniform_h(4, 1).value() == 248);
    CHECK(std::log(ratio_estimate(4, 1)) == Catch::Approx(std::log(248.0)).margin(1.5));
}

TEST_CASE("ratio estimate grows monotonically in n") {
    for (int m = 3; m <= 5; ++m)
        for (int n = 1; n < 8; ++n)
            CHECK(ratio_estimate(m, static_cast<unsigned long>(n + 1)) >
                  ratio_estimate(m, static_cast<unsigned long>(n)));
}

TEST_CASE("nonuniform proportion estimate") {
    // triangle: exact H = 1, log = 0
    double t = nonuniform_log_estimate(Composition({1, 1, 1}));
    CHECK(std::isfinite(t));
    // the proportion heuristic is a large-N device; at desk scale only
    // the order of magnitude in log space is asserted
    auto rep333 = error_report(uniform_h(3, 3), nonuniform_log_estimate(Composition({3, 3, 3})));
    CHECK(rep333.rel_log_error < 1.0);
    Count exact234 = hamiltonian_cycles(Composition({2, 3, 4}));
    auto rep234 = error_report(exact234, nonuniform_log_estimate(Composition({2, 3, 4})));
    CHECK(rep234.relative_defined);
    CHECK(rep234.rel_log_error < 1.0);
    CHECK_THROWS_AS(nonuniform_log_estimate(Composition({5})), std::domain_error);
}

TEST_CASE("error reports") {
    auto perfect = error_report(Count(16ul), std::log(16.0));
    CHECK(perfect.rel_log_error == Catch::Approx(0.0).margin(1e-12));
    CHECK(perfect.relative_defined);
    auto absolute_only = error_report(Count(1ul), 0.5);
    CHECK_FALSE(absolute_only.relative_defined);
    CHECK(absolute_only.abs_log_error == Catch::Approx(0.5));
    CHECK_THROWS_AS(error_report(Count(0ul), 1.0), std::domain_error);
}
