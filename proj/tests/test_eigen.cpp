#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

#include <Eigen/Dense>

#include "doctest.h"
#include "test_support.hpp"
#include "wellsep/eigen.hpp"
#include "wellsep/errors.hpp"

using namespace wellsep;

namespace {

void check_pair_contract(const DenseMatrix& a, const SpectrumReport& rep) {
    REQUIRE(rep.pairs.size() == a.size());
    for (std::size_t k = 0; k < rep.pairs.size(); ++k) {
        const auto& p = rep.pairs[k];
        CHECK(std::abs(norm2(p.eigenvector) - 1.0) <= 1e-12);
        CHECK(p.residual <= residual_tolerance(a));
        if (k > 0) {
            const auto prev = rep.pairs[k - 1].eigenvalue;
            CHECK((prev.real() < p.eigenvalue.real() ||
                   (prev.real() == p.eigenvalue.real() && prev.imag() <= p.eigenvalue.imag())));
        }
    }
}

// Independent reference: Eigen's real Schur based solver, sorted like ours.
std::vector<Complex> reference_eigenvalues(const DenseMatrix& a) {
    const auto n = static_cast<Eigen::Index>(a.size());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a(i, j).real();
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    std::vector<Complex> v(es.eigenvalues().begin(), es.eigenvalues().end());
    std::sort(v.begin(), v.end(), [](Complex x, Complex y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    return v;
}

}  // namespace

TEST_CASE("eig_symmetric: classic 2x2") {
    const auto a = DenseMatrix::from_rows({{2, 1}, {1, 2}}, DenseMatrix::Symmetry::symmetric);
    const auto rep = eig_symmetric(a);
    check_pair_contract(a, rep);
    CHECK(rep.pairs[0].eigenvalue.real() == doctest::Approx(1.0));
    CHECK(rep.pairs[1].eigenvalue.real() == doctest::Approx(3.0));
    const double h = 1.0 / std::numbers::sqrt2;
    CHECK(rep.pairs[0].eigenvector[0].real() == doctest::Approx(h));
    CHECK(rep.pairs[0].eigenvector[1].real() == doctest::Approx(-h));
    CHECK(rep.pairs[1].eigenvector[0].real() == doctest::Approx(h));
    CHECK(rep.pairs[1].eigenvector[1].real() == doctest::Approx(h));
}

TEST_CASE("eig_symmetric: diagonal input returns the standard basis") {
    const std::vector<double> d = {9.0, 4.0};
    const auto rep = eig_symmetric(DenseMatrix::diagonal(d));
    CHECK(rep.pairs[0].eigenvalue == Complex(4.0));
    CHECK(rep.pairs[1].eigenvalue == Complex(9.0));
    CHECK(rep.pairs[0].eigenvector[1] == Complex(1.0));
    CHECK(rep.pairs[1].eigenvector[0] == Complex(1.0));
}

TEST_CASE("eig_symmetric rejects nonsymmetric input") {
    CHECK_THROWS_AS(eig_symmetric(DenseMatrix::from_rows({{1, 2}, {3, 4}})), PreconditionError);
}

TEST_CASE("property: Jacobi reconstruction and orthogonality") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const std::size_t n = seed == 1 ? 10 : 5 * seed;
        const auto a = testing::random_symmetric(n, seed);
        const auto rep = eig_symmetric(a);
        check_pair_contract(a, rep);
        // X Lambda X^T and X^T X.
        double recon = 0.0;
        double orth = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                double s = 0.0;
                double g = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    s += rep.pairs[k].eigenvector[i].real() * rep.pairs[k].eigenvalue.real() *
                         rep.pairs[k].eigenvector[j].real();
                    g += rep.pairs[i].eigenvector[k].real() * rep.pairs[j].eigenvector[k].real();
                }
                recon += std::pow(s - a(i, j).real(), 2);
                orth += std::pow(g - (i == j ? 1.0 : 0.0), 2);
                if (i != j) CHECK(std::abs(g) <= 1e-10);
            }
        }
        CHECK(std::sqrt(recon) <= 1e-9 * a.frobenius_norm());
        CHECK(std::sqrt(orth) <= 1e-9);
    }
}

TEST_CASE("eig_general: rotation and triangular matrices") {
    const auto rot = eig_general(DenseMatrix::from_rows({{0, 1}, {-1, 0}}));
    CHECK(rot.pairs[0].eigenvalue.real() == doctest::Approx(0.0));
    CHECK(rot.pairs[0].eigenvalue.imag() == doctest::Approx(-1.0));
    CHECK(rot.pairs[1].eigenvalue.imag() == doctest::Approx(1.0));

    const auto a = DenseMatrix::from_rows({{1, 5}, {0, 2}});
    const auto tri = eig_general(a);
    check_pair_contract(a, tri);
    CHECK(tri.pairs[0].eigenvalue.real() == doctest::Approx(1.0));
    CHECK(tri.pairs[1].eigenvalue.real() == doctest::Approx(2.0));
}

TEST_CASE("eig_general: 1x1 and identity") {
    const auto one = eig_general(DenseMatrix::from_rows({{-3.5}}));
    CHECK(one.pairs[0].eigenvalue == Complex(-3.5));
    CHECK(one.pairs[0].eigenvector[0] == Complex(1.0));
    const auto id = DenseMatrix::identity(4);
    const auto rep = eig_general(id);
    check_pair_contract(id, rep);
    for (const auto& p : rep.pairs) CHECK(p.eigenvalue.real() == doctest::Approx(1.0));
}

TEST_CASE("property: eig_general trace identity, conjugate pairs and reference agreement") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const std::size_t n = seed <= 4 ? 20 : 3 + 3 * seed;
        const auto a = testing::random_general(n, seed);
        const auto rep = eig_general(a);
        check_pair_contract(a, rep);

        Complex sum = 0.0;
        double trace = 0.0;
        for (std::size_t i = 0; i < n; ++i) trace += a(i, i).real();
        for (const auto& p : rep.pairs) sum += p.eigenvalue;
        CHECK(std::abs(sum - trace) <= 1e-8 * (1.0 + std::abs(trace)));

        const auto lams = rep.eigenvalues();
        for (const auto& l : lams) {
            if (l.imag() == 0.0) continue;
            const bool has_conj = std::any_of(lams.begin(), lams.end(), [&](Complex m) {
                return std::abs(m - std::conj(l)) <= 1e-10;
            });
            CHECK(has_conj);
        }

        const auto ref = reference_eigenvalues(a);
        for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(lams[k] - ref[k]) <= 1e-9 * (1.0 + a.frobenius_norm()));
    }
}

TEST_CASE("property: spectra are invariant under symmetric permutation") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const std::size_t n = 4 + seed;
        const auto perm = testing::random_permutation(n, seed);
        const auto s = testing::random_symmetric(n, seed);
        const auto g = testing::random_general(n, seed + 50);
        const auto ls = eig_symmetric(s).eigenvalues();
        const auto lsp = eig_symmetric(permuted(s, perm)).eigenvalues();
        const auto lg = eig_general(g).eigenvalues();
        const auto lgp = eig_general(permuted(g, perm)).eigenvalues();
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(std::abs(ls[k] - lsp[k]) <= 1e-9);
            CHECK(std::abs(lg[k] - lgp[k]) <= 1e-9);
        }
    }
}

TEST_CASE("match_to_discs: nearest disc") {
    SpectrumReport spec;
    spec.pairs.resize(2);
    spec.pairs[0].eigenvalue = 4.9;
    spec.pairs[1].eigenvalue = 10.1;
    const auto rep = separation_report(compute_discs(DenseMatrix::from_rows({{5, 1}, {1, 10}})));
    const auto m = match_to_discs(spec, rep);
    CHECK(m.matched);
    CHECK(*m.pairs[0].disc_index == 0);
    CHECK(*m.pairs[1].disc_index == 1);
}

TEST_CASE("match_to_discs: overlapping discs agree with brute force") {
    SpectrumReport spec;
    spec.pairs.resize(2);
    spec.pairs[0].eigenvalue = 2.5;
    spec.pairs[1].eigenvalue = 2.6;
    const auto rep = separation_report(compute_discs(DenseMatrix::from_rows({{2, 1}, {1, 3}})));
    const auto m = match_to_discs(spec, rep);

    // Brute force over both assignments, minimizing total |lambda - center|.
    const double keep = std::abs(2.5 - 2.0) + std::abs(2.6 - 3.0);
    const double swap = std::abs(2.5 - 3.0) + std::abs(2.6 - 2.0);
    const std::size_t first = keep <= swap ? 0 : 1;
    CHECK(*m.pairs[0].disc_index == first);
    CHECK(*m.pairs[1].disc_index == 1 - first);
    CHECK(m.matched);
    CHECK_FALSE(m.oracle_contradiction);
}

TEST_CASE("match_to_discs: diagonal matrix maps eigenvalue i to disc i") {
    const std::vector<double> d = {1.0, 5.0, 3.0, -2.0};
    const auto a = DenseMatrix::diagonal(d);
    const auto m = match_to_discs(eig_symmetric(a), separation_report(compute_discs(a)));
    CHECK(m.matched);
    for (const auto& p : m.pairs) CHECK(a(*p.disc_index, *p.disc_index) == p.eigenvalue);
}

TEST_CASE("match_to_discs: falls back to a total assignment and reports containment") {
    // Both eigenvalues nearest to disc 0 but only one can sit in it.
    SpectrumReport spec;
    spec.pairs.resize(2);
    spec.pairs[0].eigenvalue = 0.9;
    spec.pairs[1].eigenvalue = 1.1;
    const auto rep = separation_report(compute_discs(DenseMatrix::from_rows({{1, 0.2}, {0.2, 3}})));
    REQUIRE(rep.disjoint);
    const auto m = match_to_discs(spec, rep);
    CHECK(*m.pairs[0].disc_index != *m.pairs[1].disc_index);
    CHECK_FALSE(m.matched);
    CHECK(m.oracle_contradiction);
}

TEST_CASE("property: Hungarian assignment matches brute-force enumeration") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 6;
        std::vector<double> cost(n * n);
        for (auto& c : cost) c = u(rng);
        const auto got = min_cost_assignment(n, cost);
        double got_cost = 0.0;
        for (std::size_t i = 0; i < n; ++i) got_cost += cost[i * n + got[i]];

        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        double best = std::numeric_limits<double>::infinity();
        do {
            double c = 0.0;
            for (std::size_t i = 0; i < n; ++i) c += cost[i * n + p[i]];
            best = std::min(best, c);
        } while (std::next_permutation(p.begin(), p.end()));
        CHECK(got_cost == doctest::Approx(best).epsilon(1e-12));
    }
}
