#pragma once

#include <cstddef>
#include <vector>

#include "wellsep/eigen.hpp"
#include "wellsep/matrix.hpp"

namespace wellsep {

/// Image of the disc a*e^{i alpha} + r1*e^{i theta} under z -> 1/z.
struct InvertedDisc {
    Complex center;
    double radius = 0.0;
};

/// Region of z = lambda_tilde / lambda for a disc (a, r1) and its perturbed
/// counterpart (a, r2) sharing the center, together with the circle that
/// approximates it.
struct ErrorRegion {
    double a = 0.0;
    double alpha = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
    /// (r1 + r2) / (a - r1): worst-case relative error.
    double bound = 0.0;
    /// (a^2 + r1 r2) / ((a + r1)(a - r1))
    double approx_center = 0.0;
    /// a (r1 + r2) / ((a + r1)(a - r1))
    double approx_radius = 0.0;
    /// approx_center - 1 = (r1^2 + r1 r2) / ((a + r1)(a - r1))
    double shifted_center = 0.0;
};

/// Condition-number bound for the eigenvector matrix of a matrix whose
/// off-disc eigenvector entries satisfy |x_i| < k / n^2.
struct ConditionBound {
    std::size_t n = 0;
    double k = 0.0;
    /// (n^3 + 3kn^2 + k^2) / (n^3 - 3kn^2 - 3k^2)
    double kappa_bound = 1.0;
    // Entry bounds on H = X^T X used to derive kappa_bound.
    double h_diag_lower = 1.0;
    double h_diag_upper = 1.0;
    double h_offdiag_upper = 0.0;
    double h_radius_upper = 0.0;
};

/// Throws DegenerateDisc when a <= r1.
InvertedDisc invert_disc(double a, double alpha, double r1);

/// Throws DegenerateDisc when a <= r1, PreconditionError on negative radii.
ErrorRegion error_region(double a, double r1, double r2, double alpha = 0.0);

/// Unsimplified numerator form (r1^2 + a(r1 + r2) + r1 r2) / ((a + r1)(a - r1))
/// of the relative error bound; agrees with ErrorRegion::bound.
double error_bound_expanded(double a, double r1, double r2);

/// z - 1 on the boundary of the region, at disc angles theta (original) and
/// eta (perturbed), from the expanded sum form.
Complex oval_sample(const ErrorRegion& region, double theta, double eta);

/// z at the same angles from the product (a + r2 e^{i eta})(a + r1 e^{i theta}) / ((a + r1)(a - r1)).
Complex oval_product(const ErrorRegion& region, double theta, double eta);

/// |lambda - lambda_tilde| / |lambda|. Throws ZeroEigenvalue when |lambda| < 1e-300.
double relative_error(Complex lambda, Complex lambda_tilde);

/// r_i / |lambda - a_i|: cap on the magnitude of eigenvector entry i for an
/// eigenvalue lambda belonging to a different disc.
/// Throws CoincidentCenter when |lambda - a_i| < 1e-12 (1 + |a_i|).
double lemma_entry_bound(Complex a_i, double r_i, Complex lambda);

/// Smallest k with |x_i| <= k / n^2 for every eigenvector x and every entry i
/// other than the eigenvector's disc index. Needs a spectrum with disc
/// indices (match_to_discs) and n >= 2.
double estimate_k(const SpectrumReport& spectrum);

/// Throws InvalidRegime when n^3 - 3kn^2 - 3k^2 <= 0.
ConditionBound condition_bound(std::size_t n, double k);

/// kappa_bound * delta_norm, the eigenvalue shift allowed under a perturbation
/// of spectral norm delta_norm.
double corollary_bound(const ConditionBound& cond, double delta_norm);

/// Spectral 2-norm by power iteration on D^H D (relative change 1e-10,
/// at most 10000 iterations).
double spectral_norm(const DenseMatrix& d);

/// kappa_2(X) of the eigenvector matrix (columns = eigenvectors of the
/// spectrum), from the extreme eigenvalues of X^H X by power and inverse
/// power iteration. Returns +inf when X^H X is numerically singular.
double eigenvector_condition_number(const SpectrumReport& spectrum);

}  // namespace wellsep
