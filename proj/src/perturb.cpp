#include "wellsep/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "wellsep/eigen.hpp"
#include "wellsep/errors.hpp"

namespace wellsep {

namespace {

constexpr double kRadiusFraction = 0.4;

void require_dimension(std::size_t n, const char* who) {
    if (n < 2) throw PreconditionError(std::string(who) + ": needs n >= 2");
}

double row_radius(const std::vector<double>& m, std::size_t n, std::size_t i) {
    double r = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j != i) r += std::abs(m[i * n + j]);
    }
    return r;
}

}  // namespace

std::string_view to_string(Spacing s) noexcept {
    return s == Spacing::linear ? "linear" : "quadratic";
}

Spacing parse_spacing(std::string_view name) {
    if (name == "linear") return Spacing::linear;
    if (name == "quadratic") return Spacing::quadratic;
    throw PreconditionError("unknown separation '" + std::string(name) + "'");
}

DenseMatrix gen_separated_symmetric(std::size_t n, Spacing spacing, std::uint64_t seed) {
    require_dimension(n, "gen_separated_symmetric");
    const double nd = static_cast<double>(n);
    const double gap = spacing == Spacing::linear ? nd : nd * nd;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> m(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double g = gauss(rng);
            m[i * n + j] = g;
            m[j * n + i] = g;
        }
    }
    // The smallest diagonal equals the gap, so min(gap, a_1) == gap.
    const double cap = kRadiusFraction * gap;
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, row_radius(m, n, i));
    if (worst > cap) {
        const double f = cap / worst;
        for (auto& e : m) e *= f;
    }
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = static_cast<double>(i + 1) * gap;
    return DenseMatrix::from_real(n, m, DenseMatrix::Symmetry::symmetric);
}

DenseMatrix gen_hessenberg_positive(std::size_t n, std::uint64_t seed) {
    require_dimension(n, "gen_hessenberg_positive");
    const double nd = static_cast<double>(n);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(std::nextafter(0.0, 1.0), 1.0);
    std::vector<double> m(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = (i == 0 ? 0 : i - 1); j < n; ++j) m[i * n + j] = unif(rng);
    }
    const double cap = kRadiusFraction * nd;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = row_radius(m, n, i);
        if (r > cap) {
            const double f = cap / r;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) m[i * n + j] *= f;
            }
        }
        m[i * n + i] = static_cast<double>(i + 1) * nd;
    }
    return DenseMatrix::from_real(n, m);
}

DenseMatrix truncate_offdiag(const DenseMatrix& a, double c) {
    if (!(c >= 0.0 && c <= 1.0)) throw PreconditionError("truncate_offdiag: c must lie in [0, 1]");
    const std::size_t n = a.size();
    std::vector<Complex> b(a.entries().begin(), a.entries().end());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) b[i * n + j] *= c;
        }
    }
    return DenseMatrix(n, std::move(b), a.symmetry());
}

DenseMatrix gen_structured_S(std::size_t n, std::uint64_t seed) {
    require_dimension(n, "gen_structured_S");
    const double inv_n = 1.0 / static_cast<double>(n);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.5, 1.5);
    std::vector<double> m(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        m[i * n + i] = unif(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = std::clamp(gauss(rng) * inv_n, -inv_n, inv_n);
            m[i * n + j] = v;
            m[j * n + i] = v;
        }
    }
    return DenseMatrix::from_real(n, m, DenseMatrix::Symmetry::symmetric);
}

DenseMatrix apply_perturbation(const DenseMatrix& a, const PerturbSpec& spec) {
    switch (spec.kind) {
        case PerturbSpec::Kind::offdiag_scale:
            return truncate_offdiag(a, spec.factor);
        case PerturbSpec::Kind::structured_S:
            if (!(spec.t >= 0.0)) throw PreconditionError("apply_perturbation: t must be >= 0");
            return add(a, scaled(gen_structured_S(a.size(), spec.seed), spec.t));
    }
    throw PreconditionError("apply_perturbation: unknown kind");
}

InterlaceResult check_interlacing(const DenseMatrix& a, const DenseMatrix& s, double t) {
    if (a.size() != s.size()) throw DimensionMismatch("check_interlacing: A and S differ in size");
    if (!(t >= 0.0)) throw PreconditionError("check_interlacing: t must be >= 0");
    const auto base = eig_symmetric(a);
    const auto pert = eig_symmetric(add(a, scaled(s, t)));

    InterlaceResult res;
    for (const auto& p : base.pairs) res.base_eigs.push_back(p.eigenvalue.real());
    for (const auto& p : pert.pairs) res.pert_eigs.push_back(p.eigenvalue.real());
    res.slack = 1e-9 * (1.0 + a.frobenius_norm());

    const std::size_t n = res.base_eigs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const bool lower_ok = res.base_eigs[i] <= res.pert_eigs[i] + res.slack;
        const bool upper_ok = i + 1 == n || res.pert_eigs[i] <= res.base_eigs[i + 1] + res.slack;
        if (!(lower_ok && upper_ok)) {
            res.first_violation = i;
            break;
        }
    }
    res.interlaced = !res.first_violation.has_value();
    return res;
}

}  // namespace wellsep
