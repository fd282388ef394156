#include "wellsep/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <string>

#include "wellsep/errors.hpp"

namespace wellsep {

namespace {

constexpr double kPowerTol = 1e-10;
constexpr int kPowerMaxIter = 10000;

void require_disc(double a, double r1) {
    if (!(a > r1)) {
        throw DegenerateDisc("disc with |center| " + std::to_string(a) + " <= radius " +
                             std::to_string(r1) + " reaches the origin");
    }
}

using Operator = std::function<std::vector<Complex>(const std::vector<Complex>&)>;

Complex dot(const std::vector<Complex>& x, const std::vector<Complex>& y) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

// Largest eigenvalue of a Hermitian positive semidefinite operator, stopping
// once the Rayleigh quotient changes by at most kPowerTol relative.
double hermitian_power(const Operator& op, std::size_t n) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> unif(0.5, 1.5);
    std::vector<Complex> v(n);
    for (auto& e : v) e = unif(rng);
    double nrm = norm2(v);
    for (auto& e : v) e /= nrm;

    double rho = 0.0;
    for (int it = 0; it < kPowerMaxIter; ++it) {
        auto w = op(v);
        const double next = dot(v, w).real();
        nrm = norm2(w);
        if (nrm == 0.0) return 0.0;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / nrm;
        if (it > 0 && std::abs(next - rho) <= kPowerTol * std::abs(next)) return next;
        rho = next;
    }
    return rho;
}

// Cholesky factor L (lower, row-major) of a Hermitian positive definite
// matrix; false when a pivot is not positive.
bool cholesky(std::vector<Complex>& m, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        double d = m[j * n + j].real();
        for (std::size_t k = 0; k < j; ++k) d -= std::norm(m[j * n + k]);
        if (!(d > 0.0)) return false;
        const double ljj = std::sqrt(d);
        m[j * n + j] = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            Complex s = m[i * n + j];
            for (std::size_t k = 0; k < j; ++k) s -= m[i * n + k] * std::conj(m[j * n + k]);
            m[i * n + j] = s / ljj;
        }
    }
    return true;
}

std::vector<Complex> cholesky_solve(const std::vector<Complex>& l, std::size_t n,
                                    std::vector<Complex> b) {
    for (std::size_t i = 0; i < n; ++i) {
        Complex s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= l[i * n + k] * b[k];
        b[i] = s / l[i * n + i];
    }
    for (std::size_t i = n; i-- > 0;) {
        Complex s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= std::conj(l[k * n + i]) * b[k];
        b[i] = s / l[i * n + i];
    }
    return b;
}

}  // namespace

InvertedDisc invert_disc(double a, double alpha, double r1) {
    if (r1 < 0.0) throw PreconditionError("invert_disc: negative radius");
    require_disc(a, r1);
    const double denom = (a + r1) * (a - r1);
    return InvertedDisc{std::polar(a / denom, -alpha), r1 / denom};
}

ErrorRegion error_region(double a, double r1, double r2, double alpha) {
    if (r1 < 0.0 || r2 < 0.0) throw PreconditionError("error_region: negative radius");
    require_disc(a, r1);
    const double denom = (a + r1) * (a - r1);
    ErrorRegion reg;
    reg.a = a;
    reg.alpha = alpha;
    reg.r1 = r1;
    reg.r2 = r2;
    reg.bound = (r1 + r2) / (a - r1);
    reg.approx_center = (a * a + r1 * r2) / denom;
    reg.approx_radius = a * (r1 + r2) / denom;
    reg.shifted_center = (r1 * r1 + r1 * r2) / denom;
    return reg;
}

double error_bound_expanded(double a, double r1, double r2) {
    require_disc(a, r1);
    return (r1 * r1 + a * (r1 + r2) + r1 * r2) / ((a + r1) * (a - r1));
}

Complex oval_sample(const ErrorRegion& region, double theta, double eta) {
    const double a = region.a;
    const double r1 = region.r1;
    const double r2 = region.r2;
    const double denom = (a + r1) * (a - r1);
    const Complex e_theta = std::polar(1.0, theta);
    const Complex e_eta = std::polar(1.0, eta);
    const Complex e_sum = std::polar(1.0, theta + eta);
    return r1 * r1 / denom + (a * (r1 * e_theta + r2 * e_eta) + r1 * r2 * e_sum) / denom;
}

Complex oval_product(const ErrorRegion& region, double theta, double eta) {
    const double a = region.a;
    const double r1 = region.r1;
    const double r2 = region.r2;
    return (a + r2 * std::polar(1.0, eta)) * (a + r1 * std::polar(1.0, theta)) /
           ((a + r1) * (a - r1));
}

double relative_error(Complex lambda, Complex lambda_tilde) {
    if (std::abs(lambda) < 1e-300) throw ZeroEigenvalue("relative_error: reference eigenvalue is zero");
    return std::abs(lambda - lambda_tilde) / std::abs(lambda);
}

double lemma_entry_bound(Complex a_i, double r_i, Complex lambda) {
    const double gap = std::abs(lambda - a_i);
    if (gap < 1e-12 * (1.0 + std::abs(a_i))) {
        throw CoincidentCenter("lemma_entry_bound: eigenvalue coincides with the disc center");
    }
    return r_i / gap;
}

double estimate_k(const SpectrumReport& spectrum) {
    const std::size_t n = spectrum.pairs.size();
    if (n < 2) throw PreconditionError("estimate_k: needs n >= 2");
    double worst = 0.0;
    for (const auto& p : spectrum.pairs) {
        if (!p.disc_index) throw PreconditionError("estimate_k: spectrum is not matched to discs");
        for (std::size_t i = 0; i < p.eigenvector.size(); ++i) {
            if (i == *p.disc_index) continue;
            worst = std::max(worst, std::abs(p.eigenvector[i]));
        }
    }
    return static_cast<double>(n) * static_cast<double>(n) * worst;
}

ConditionBound condition_bound(std::size_t n, double k) {
    if (n == 0) throw PreconditionError("condition_bound: n must be positive");
    if (k < 0.0) throw PreconditionError("condition_bound: k must be nonnegative");
    const double nd = static_cast<double>(n);
    const double n2 = nd * nd;
    const double n3 = n2 * nd;
    const double denom = n3 - 3.0 * k * n2 - 3.0 * k * k;
    if (!(denom > 0.0)) {
        throw InvalidRegime("condition_bound: n^3 - 3kn^2 - 3k^2 = " + std::to_string(denom) +
                            " is not positive");
    }
    ConditionBound cb;
    cb.n = n;
    cb.k = k;
    cb.kappa_bound = (n3 + 3.0 * k * n2 + k * k) / denom;
    cb.h_diag_lower = 1.0 - 3.0 * k * k / n3;
    cb.h_diag_upper = 1.0 + k * k / n3;
    cb.h_offdiag_upper = 2.0 * k / n2 + k * k / n3;
    cb.h_radius_upper = 3.0 * k / nd;
    return cb;
}

double corollary_bound(const ConditionBound& cond, double delta_norm) {
    if (delta_norm < 0.0) throw PreconditionError("corollary_bound: negative norm");
    return cond.kappa_bound * delta_norm;
}

double spectral_norm(const DenseMatrix& d) {
    const std::size_t n = d.size();
    const auto e = d.entries();
    const Operator dhd = [&](const std::vector<Complex>& x) {
        const auto y = multiply(d, x);
        std::vector<Complex> z(n);
        for (std::size_t j = 0; j < n; ++j) {
            Complex s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += std::conj(e[i * n + j]) * y[i];
            z[j] = s;
        }
        return z;
    };
    return std::sqrt(std::max(0.0, hermitian_power(dhd, n)));
}

double eigenvector_condition_number(const SpectrumReport& spectrum) {
    const std::size_t n = spectrum.pairs.size();
    if (n == 0) throw PreconditionError("eigenvector_condition_number: empty spectrum");
    // Gram matrix G = X^H X.
    std::vector<Complex> g(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            g[i * n + j] = dot(spectrum.pairs[i].eigenvector, spectrum.pairs[j].eigenvector);
        }
    }
    const Operator apply_g = [&](const std::vector<Complex>& x) {
        std::vector<Complex> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            Complex s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += g[i * n + j] * x[j];
            y[i] = s;
        }
        return y;
    };
    const double lmax = hermitian_power(apply_g, n);

    std::vector<Complex> l = g;
    if (!cholesky(l, n)) return std::numeric_limits<double>::infinity();
    const Operator apply_ginv = [&](const std::vector<Complex>& x) { return cholesky_solve(l, n, x); };
    const double inv_lmin = hermitian_power(apply_ginv, n);
    if (!(inv_lmin > 0.0) || !std::isfinite(inv_lmin)) return std::numeric_limits<double>::infinity();
    return std::sqrt(lmax * inv_lmin);
}

}  // namespace wellsep
