#include <cmath>

#include "doctest.h"
#include "test_support.hpp"
#include "wellsep/eigen.hpp"
#include "wellsep/errors.hpp"
#include "wellsep/gershgorin.hpp"
#include "wellsep/perturb.hpp"

using namespace wellsep;

TEST_CASE("gen_separated_symmetric: n = 2 construction") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto a = gen_separated_symmetric(2, Spacing::linear, seed);
        CHECK(a(0, 0) == Complex(2.0));
        CHECK(a(1, 1) == Complex(4.0));
        CHECK(std::abs(a(0, 1)) <= 0.8 + 1e-15);
        CHECK(separation_report(compute_discs(a)).disjoint);
    }
    CHECK_THROWS_AS(gen_separated_symmetric(1, Spacing::linear, 0), PreconditionError);
}

TEST_CASE("property: generated separated matrices") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        for (auto spacing : {Spacing::linear, Spacing::quadratic}) {
            const std::size_t n = 5 + 5 * seed;
            const auto a = gen_separated_symmetric(n, spacing, seed);
            CHECK(a.is_symmetric_tagged());
            const double gap = spacing == Spacing::linear ? double(n) : double(n * n);
            for (std::size_t i = 0; i < n; ++i) CHECK(a(i, i).real() == double(i + 1) * gap);
            const auto rep = separation_report(compute_discs(a));
            CHECK(rep.disjoint);
            CHECK(rep.origin_clear);
            CHECK(rep.unit_circle_clear);
            CHECK(rep.max_radius <= 0.4 * gap * (1 + 1e-15));
            for (const auto& lam : eig_symmetric(a).eigenvalues()) CHECK(lam.real() > 0.0);
        }
    }
}

TEST_CASE("gen_hessenberg_positive pattern") {
    const auto h = gen_hessenberg_positive(3, 5);
    CHECK(h(2, 0) == Complex(0.0));
    CHECK(h(1, 0).real() > 0.0);
    CHECK(h(2, 1).real() > 0.0);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const std::size_t n = 4 + 7 * seed;
        const auto a = gen_hessenberg_positive(n, seed);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i > j + 1) {
                    CHECK(a(i, j) == Complex(0.0));
                } else {
                    CHECK(a(i, j).real() > 0.0);
                }
            }
        }
        const auto rep = separation_report(compute_discs(a), RadiusMode::row);
        CHECK(rep.disjoint);
        const double tol = 1e-9 * (1.0 + a.frobenius_norm());
        for (const auto& lam : eig_general(a).eigenvalues()) {
            bool inside = false;
            for (const auto& d : rep.discs) inside = inside || d.contains(lam, RadiusMode::row, tol);
            CHECK(inside);
        }
    }
}

TEST_CASE("truncate_offdiag") {
    const auto a = DenseMatrix::from_rows({{5, 1}, {2, 10}});
    CHECK(truncate_offdiag(a, 1.0) == a);
    CHECK(truncate_offdiag(a, 0.5) == DenseMatrix::from_rows({{5, 0.5}, {1, 10}}));
    const auto d = truncate_offdiag(a, 0.0);
    const auto lams = eig_general(d).eigenvalues();
    CHECK(lams[0] == Complex(5.0));
    CHECK(lams[1] == Complex(10.0));
    CHECK_THROWS_AS(truncate_offdiag(a, 1.5), PreconditionError);
}

TEST_CASE("property: truncation scales radii and keeps centers") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto a = testing::random_general(3 + seed, seed);
        const double c = 0.1 * static_cast<double>(seed);
        const auto da = compute_discs(a);
        const auto db = compute_discs(truncate_offdiag(a, c));
        for (std::size_t i = 0; i < da.size(); ++i) {
            CHECK(db[i].center == da[i].center);
            CHECK(db[i].row_radius == doctest::Approx(c * da[i].row_radius).epsilon(1e-14));
            CHECK(db[i].col_radius == doctest::Approx(c * da[i].col_radius).epsilon(1e-14));
        }
    }
}

TEST_CASE("gen_structured_S construction") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const std::size_t n = 2 + 4 * seed;
        const auto s = gen_structured_S(n, seed);
        CHECK(s.is_symmetric());
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(s(i, i).real() >= 0.5);
            CHECK(s(i, i).real() <= 1.5);
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) CHECK(std::abs(s(i, j)) <= 1.0 / double(n));
            }
        }
    }
    CHECK_THROWS_AS(gen_structured_S(1, 0), PreconditionError);
}

TEST_CASE("property: generators are deterministic per seed") {
    CHECK(gen_separated_symmetric(12, Spacing::linear, 9) == gen_separated_symmetric(12, Spacing::linear, 9));
    CHECK(gen_hessenberg_positive(12, 9) == gen_hessenberg_positive(12, 9));
    CHECK(gen_structured_S(12, 9) == gen_structured_S(12, 9));
    CHECK_FALSE(gen_structured_S(12, 9) == gen_structured_S(12, 10));
}

TEST_CASE("apply_perturbation dispatch") {
    const auto a = gen_separated_symmetric(6, Spacing::linear, 1);
    PerturbSpec half;
    half.factor = 0.5;
    CHECK(apply_perturbation(a, half) == truncate_offdiag(a, 0.5));
    PerturbSpec s;
    s.kind = PerturbSpec::Kind::structured_S;
    s.t = 0.25;
    s.seed = 4;
    CHECK(apply_perturbation(a, s) == add(a, scaled(gen_structured_S(6, 4), 0.25)));
}

TEST_CASE("check_interlacing examples") {
    const std::vector<double> da = {1.0, 10.0};
    const std::vector<double> ds = {0.5, 0.5};
    const auto res = check_interlacing(DenseMatrix::diagonal(da), DenseMatrix::diagonal(ds), 1.0);
    CHECK(res.interlaced);
    CHECK(res.base_eigs == std::vector<double>{1.0, 10.0});
    CHECK(res.pert_eigs == std::vector<double>{1.5, 10.5});

    const auto a = gen_separated_symmetric(10, Spacing::linear, 3);
    const auto s = gen_structured_S(10, 4);
    const auto zero = check_interlacing(a, s, 0.0);
    CHECK(zero.interlaced);
    CHECK(zero.base_eigs == zero.pert_eigs);

    // A shift larger than the spectral gap breaks the chain at the first pair.
    const std::vector<double> big = {20.0, 20.0};
    const auto broken = check_interlacing(DenseMatrix::diagonal(da), DenseMatrix::diagonal(big), 1.0);
    CHECK_FALSE(broken.interlaced);
    REQUIRE(broken.first_violation.has_value());
    CHECK(*broken.first_violation == 0);
}

TEST_CASE("property: interlacing and monotonicity on generated inputs") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const std::size_t n = 10 + 10 * seed;
        const auto a = gen_separated_symmetric(n, Spacing::linear, seed);
        const auto s = gen_structured_S(n, seed + 100);
        for (double t : {0.25, 1.0}) {
            const auto res = check_interlacing(a, s, t);
            CHECK(res.interlaced);
            for (std::size_t i = 0; i < n; ++i) CHECK(res.pert_eigs[i] >= res.base_eigs[i] - res.slack);
        }
    }
}
