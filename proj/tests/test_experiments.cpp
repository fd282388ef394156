#include <cmath>

#include "doctest.h"
#include "test_support.hpp"
#include "wellsep/errors.hpp"
#include "wellsep/experiments.hpp"
#include "wellsep/perturb.hpp"

using namespace wellsep;

TEST_CASE("run_bounds endpoints") {
    const auto a = gen_separated_symmetric(8, Spacing::linear, 3);
    const auto same = run_bounds(a, 1.0);
    for (const auto& r : same.rows) {
        CHECK(r.rel_error == 0.0);
        CHECK(r.r1 == r.r2);
    }
    const auto diag = run_bounds(a, 0.0);
    for (const auto& r : diag.rows) {
        CHECK(r.r2 == 0.0);
        CHECK(r.lambda_tilde.real() == doctest::Approx(r.a));
        CHECK(r.rel_error <= r.bound + 1e-10);
    }
}

TEST_CASE("run_bounds: disc reaching the origin yields NaN bound") {
    const auto a = DenseMatrix::from_rows({{1, 2}, {2, 10}}, DenseMatrix::Symmetry::symmetric);
    const auto run = run_bounds(a, 0.5);
    bool saw_nan = false;
    for (const auto& r : run.rows) saw_nan = saw_nan || std::isnan(r.bound);
    CHECK(saw_nan);
}

TEST_CASE("property: relative error stays under the bound") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto a = gen_separated_symmetric(20, Spacing::linear, seed);
        for (double c : {0.0, 0.3, 0.7}) {
            const auto run = run_bounds(a, c);
            CHECK(run.spectrum_a.matched);
            for (const auto& r : run.rows) CHECK(r.rel_error <= r.bound + 1e-10);
        }
        const auto h = gen_hessenberg_positive(15, seed);
        for (const auto& r : run_bounds(h, 0.5).rows) CHECK(r.rel_error <= r.bound + 1e-10);
    }
}

TEST_CASE("spearman") {
    CHECK(spearman({1, 2, 3, 4}, {10, 20, 30, 40}) == doctest::Approx(1.0));
    CHECK(spearman({1, 2, 3, 4}, {4, 3, 2, 1}) == doctest::Approx(-1.0));
    CHECK(spearman({1, 2, 2, 3}, {1, 2, 2, 3}) == doctest::Approx(1.0));
    CHECK(std::isnan(spearman({1, 1, 1}, {1, 2, 3})));
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(spearman({1, 2, 3}, {0.1, 0.2, inf}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(spearman({1, 2}, {1}), DimensionMismatch);
}

TEST_CASE("eigvec_trend picks the largest eigenvalue") {
    const auto a = gen_separated_symmetric(10, Spacing::linear, 1);
    const auto spec = match_to_discs(eig_auto(a), separation_report(compute_discs(a)));
    const auto trend = eigvec_trend(a, spec);
    CHECK(trend.eig_index == 9);
    CHECK(trend.rows.size() == 10);
    CHECK(trend.spearman > 0.0);
    for (const auto& r : trend.rows) {
        if (r.entry_index != 9) CHECK(r.abs_entry <= r.trend_value + 1e-10);
    }
}

TEST_CASE("check_lemma_bounds") {
    const auto a = gen_separated_symmetric(12, Spacing::linear, 2);
    const auto report = separation_report(compute_discs(a));
    const auto spec = match_to_discs(eig_auto(a), report);
    const auto chk = check_lemma_bounds(spec, report.discs, RadiusMode::row);
    CHECK(chk.checked == 12 * 11);
    CHECK(chk.violations == 0);
    CHECK(chk.worst_excess < 0.0);
    CHECK_THROWS_AS(check_lemma_bounds(eig_auto(a), report.discs, RadiusMode::row), PreconditionError);
}

TEST_CASE("run_condition on a diagonal matrix") {
    const std::vector<double> d = {4.0, 16.0, 36.0};
    const auto a = DenseMatrix::diagonal(d);
    const auto delta = scaled(DenseMatrix::identity(3), 0.01);
    const auto row = run_condition(a, delta);
    CHECK(row.k_est == 0.0);
    CHECK(row.kappa_computed == doctest::Approx(1.0));
    REQUIRE(row.bound.has_value());
    CHECK(row.bound->kappa_bound == doctest::Approx(1.0));
    CHECK(row.status == "ok");
    CHECK(row.delta_norm == doctest::Approx(0.01));
    CHECK(row.max_eig_shift == doctest::Approx(0.01));
    CHECK(row.max_eig_shift <= row.bf_bound + 1e-12);
}

TEST_CASE("property: condition rows satisfy both bounds when valid") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto a = gen_separated_symmetric(10, Spacing::quadratic, seed);
        const auto delta = scaled(gen_structured_S(10, seed + 1), 0.01);
        const auto row = run_condition(a, delta);
        if (row.bound) {
            CHECK(row.kappa_computed <= row.bound->kappa_bound * (1 + 1e-10));
            CHECK(row.max_eig_shift <= row.bf_bound * (1 + 1e-10));
        } else {
            CHECK(row.status == "InvalidRegime");
            CHECK(std::isnan(row.bf_bound));
        }
    }
}
