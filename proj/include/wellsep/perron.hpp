#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "wellsep/matrix.hpp"

namespace wellsep {

enum class StartKind { random, diagonal_seeded };

std::string_view to_string(StartKind k) noexcept;

struct PowerTrace {
    StartKind start_kind = StartKind::random;
    /// Shift used for the diagonal seed; NaN for random starts.
    double K = 0.0;
    /// Power steps taken; equals error_log.size().
    std::size_t iterations = 0;
    /// ||A v_k - rho_k v_k||_2 after each step.
    std::vector<double> error_log;
    /// Rayleigh quotient rho_k after each step.
    std::vector<double> rayleigh_log;
    bool converged = false;
    double dominant_value = 0.0;
    /// Unit 2-norm, largest-magnitude entry positive.
    std::vector<double> dominant_vector;
};

/// x_i = 1 / |A(i,i) - K|, normalized to unit 2-norm.
/// Throws ShiftCollision when |A(i,i) - K| < 1e-12 (1 + |K|) for some i.
std::vector<double> perron_seed(const DenseMatrix& a, double K);

/// v <- A v / ||A v||_2 until ||A v - rho v||_2 <= tol * ||A||_F with
/// rho = v^T A v. A trace with converged == false is returned when max_iter
/// steps are exhausted. A must be real.
PowerTrace power_method(const DenseMatrix& a, std::vector<double> start, double tol,
                        std::size_t max_iter);

/// Symmetric, strictly positive: diagonal a seeded shuffle of 1..n,
/// off-diagonal uniform(0,1). Needs n >= 2.
DenseMatrix gen_perron_test(std::size_t n, std::uint64_t seed);

/// 2 * max_i A(i,i), the default seeding shift.
double default_shift(const DenseMatrix& a);

struct StartTrial {
    std::size_t trial = 0;
    std::uint64_t matrix_seed = 0;
    PowerTrace random;
    PowerTrace seeded;
    /// Both runs converged.
    bool included = false;
};

struct StartComparison {
    std::vector<StartTrial> trials;
    double mean_random = 0.0;
    double mean_seeded = 0.0;
    double median_random = 0.0;
    double median_seeded = 0.0;
    /// Mean of (random - seeded) iterations over included trials.
    double mean_saving = 0.0;
    std::size_t excluded = 0;
};

/// Per trial: a fresh gen_perron_test matrix, a uniform(0,1) random start and
/// a perron_seed start (K defaults to default_shift), both run with the same
/// tolerance. Trials whose runs do not both converge are excluded from the
/// statistics. Each trial draws from its own stream derived from (seed, trial).
StartComparison compare_starts(std::size_t n, std::size_t trials, std::optional<double> K,
                               double tol, std::uint64_t seed, std::size_t max_iter = 10000);

}  // namespace wellsep
