#include "wellsep/perron.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "wellsep/errors.hpp"

namespace wellsep {

namespace {

double dot(const std::vector<double>& x, const std::vector<double>& y) {
    return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

double median(std::vector<double> v) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

double mean(std::vector<double> v) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    // Sorted so the sum does not depend on trial order.
    std::sort(v.begin(), v.end());
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

std::mt19937_64 trial_stream(std::uint64_t seed, std::size_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

std::string_view to_string(StartKind k) noexcept {
    return k == StartKind::random ? "random" : "diagonal_seeded";
}

std::vector<double> perron_seed(const DenseMatrix& a, double K) {
    const std::size_t n = a.size();
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = std::abs(a(i, i) - K);
        if (d < 1e-12 * (1.0 + std::abs(K))) {
            throw ShiftCollision("perron_seed: K coincides with diagonal entry " + std::to_string(i));
        }
        x[i] = 1.0 / d;
    }
    const double nrm = norm2(x);
    for (auto& e : x) e /= nrm;
    return x;
}

PowerTrace power_method(const DenseMatrix& a, std::vector<double> start, double tol,
                        std::size_t max_iter) {
    if (!a.is_real()) throw PreconditionError("power_method: matrix must be real");
    if (start.size() != a.size()) throw DimensionMismatch("power_method: start vector length");
    double nrm = norm2(start);
    if (!(nrm > 0.0)) throw PreconditionError("power_method: start vector is zero");

    PowerTrace tr;
    tr.K = std::numeric_limits<double>::quiet_NaN();
    const double target = tol * a.frobenius_norm();
    std::vector<double> v = std::move(start);
    for (auto& e : v) e /= nrm;

    std::vector<double> av = multiply_real(a, v);
    double rho = dot(v, av);
    for (std::size_t k = 1; k <= max_iter; ++k) {
        nrm = norm2(av);
        if (!(nrm > 0.0)) break;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = av[i] / nrm;
        av = multiply_real(a, v);
        rho = dot(v, av);
        double res = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) res += (av[i] - rho * v[i]) * (av[i] - rho * v[i]);
        res = std::sqrt(res);
        tr.error_log.push_back(res);
        tr.rayleigh_log.push_back(rho);
        tr.iterations = k;
        if (res <= target) {
            tr.converged = true;
            break;
        }
    }

    std::size_t big = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (std::abs(v[i]) > std::abs(v[big])) big = i;
    }
    if (v[big] < 0.0) {
        for (auto& e : v) e = -e;
    }
    tr.dominant_value = rho;
    tr.dominant_vector = std::move(v);
    return tr;
}

DenseMatrix gen_perron_test(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw PreconditionError("gen_perron_test: needs n >= 2");
    std::mt19937_64 rng(seed);
    std::vector<double> diag(n);
    std::iota(diag.begin(), diag.end(), 1.0);
    std::shuffle(diag.begin(), diag.end(), rng);
    std::uniform_real_distribution<double> unif(std::nextafter(0.0, 1.0), 1.0);
    std::vector<double> m(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i * n + i] = diag[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = unif(rng);
            m[i * n + j] = v;
            m[j * n + i] = v;
        }
    }
    return DenseMatrix::from_real(n, m, DenseMatrix::Symmetry::symmetric);
}

double default_shift(const DenseMatrix& a) {
    double big = -std::numeric_limits<double>::infinity();
    for (const auto& d : a.diag()) big = std::max(big, d.real());
    return 2.0 * big;
}

StartComparison compare_starts(std::size_t n, std::size_t trials, std::optional<double> K,
                               double tol, std::uint64_t seed, std::size_t max_iter) {
    if (trials == 0) throw PreconditionError("compare_starts: trials must be >= 1");
    StartComparison out;
    std::vector<double> it_random, it_seeded, saving;
    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = trial_stream(seed, t);
        StartTrial tr;
        tr.trial = t;
        tr.matrix_seed = rng();
        const DenseMatrix a = gen_perron_test(n, tr.matrix_seed);

        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::vector<double> start(n);
        for (auto& e : start) e = unif(rng);
        tr.random = power_method(a, std::move(start), tol, max_iter);
        tr.random.start_kind = StartKind::random;

        const double shift = K.value_or(default_shift(a));
        tr.seeded = power_method(a, perron_seed(a, shift), tol, max_iter);
        tr.seeded.start_kind = StartKind::diagonal_seeded;
        tr.seeded.K = shift;

        tr.included = tr.random.converged && tr.seeded.converged;
        if (tr.included) {
            const auto r = static_cast<double>(tr.random.iterations);
            const auto s = static_cast<double>(tr.seeded.iterations);
            it_random.push_back(r);
            it_seeded.push_back(s);
            saving.push_back(r - s);
        } else {
            ++out.excluded;
        }
        out.trials.push_back(std::move(tr));
    }
    out.mean_random = mean(it_random);
    out.mean_seeded = mean(it_seeded);
    out.median_random = median(it_random);
    out.median_seeded = median(it_seeded);
    out.mean_saving = mean(saving);
    return out;
}

}  // namespace wellsep
