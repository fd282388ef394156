#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wellsep/bounds.hpp"
#include "wellsep/eigen.hpp"
#include "wellsep/gershgorin.hpp"
#include "wellsep/matrix.hpp"

namespace wellsep {

/// One eigenvalue of A, its disc, and the matching eigenvalue of the
/// truncated matrix B.
struct BoundRow {
    std::size_t eig_index = 0;
    std::size_t disc_index = 0;
    Complex lambda;
    Complex lambda_tilde;
    double a = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
    /// NaN when lambda is zero.
    double rel_error = 0.0;
    /// NaN when the disc reaches the origin (a <= r1).
    double bound = 0.0;
    double shifted_center = 0.0;
};

struct BoundsRun {
    SeparationReport report_a;
    SeparationReport report_b;
    SpectrumReport spectrum_a;
    SpectrumReport spectrum_b;
    std::vector<BoundRow> rows;
};

/// B = truncate_offdiag(A, c); both spectra matched to their discs; one row
/// per eigenvalue of A pairing it with B's eigenvalue in the same disc.
BoundsRun run_bounds(const DenseMatrix& a, double c, RadiusMode mode = RadiusMode::row);

struct TrendRow {
    std::size_t entry_index = 0;
    double abs_entry = 0.0;
    /// r_i / |lambda - a_i|; NaN where the center coincides with lambda.
    double trend_value = 0.0;
    /// 1 / |lambda - a_i|; +inf on coincidence.
    double inverse_gap = 0.0;
};

struct TrendRun {
    std::size_t eig_index = 0;
    Complex lambda;
    std::vector<TrendRow> rows;
    /// Spearman rank correlation of abs_entry against inverse_gap.
    double spearman = 0.0;
};

/// Eigenvector entry magnitudes of the largest-modulus eigenvalue against the
/// diagonal trend. `spectrum` must come from `a`.
TrendRun eigvec_trend(const DenseMatrix& a, const SpectrumReport& spectrum,
                      RadiusMode mode = RadiusMode::row);

/// Spearman rank correlation with average ranks on ties; +inf values rank
/// highest. NaN when either side is constant.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

struct LemmaCheck {
    std::size_t checked = 0;
    std::size_t violations = 0;
    /// max over checked entries of |x_i| - r_i / |lambda - a_i|.
    double worst_excess = 0.0;
};

/// Every entry i != disc_index of every matched eigenvector against
/// lemma_entry_bound, with additive slack `tol`.
LemmaCheck check_lemma_bounds(const SpectrumReport& spectrum, const std::vector<GershgorinDisc>& discs,
                              RadiusMode mode, double tol = 1e-10);

struct ConditionRow {
    std::size_t n = 0;
    double k_est = 0.0;
    double kappa_computed = 0.0;
    /// Empty when the regime precondition fails.
    std::optional<ConditionBound> bound;
    double delta_norm = 0.0;
    /// kappa_bound * ||Delta||_2; NaN without a bound.
    double bf_bound = 0.0;
    /// max_i |lambda_i(A + Delta) - lambda_i(A)|, pairing eigenvalues by disc.
    double max_eig_shift = 0.0;
    std::string status;
};

/// Spectra of A and A + Delta, k estimate, kappa_2(X) and both bounds.
ConditionRow run_condition(const DenseMatrix& a, const DenseMatrix& delta);

}  // namespace wellsep
