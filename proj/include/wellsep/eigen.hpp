#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wellsep/gershgorin.hpp"
#include "wellsep/matrix.hpp"

namespace wellsep {

/// One eigenpair of a dense matrix.
///
/// The eigenvector has unit 2-norm and a fixed phase: its largest-magnitude
/// entry (first one on ties) is real and positive.
struct SpectralPair {
    Complex eigenvalue;
    std::vector<Complex> eigenvector;
    /// Set by match_to_discs.
    std::optional<std::size_t> disc_index;
    /// ||A x - lambda x||_2 against the input matrix.
    double residual = 0.0;
};

struct SpectrumReport {
    /// Ascending real part, ties by ascending imaginary part.
    std::vector<SpectralPair> pairs;
    /// True when the disc assignment is a bijection consistent with containment.
    bool matched = false;
    /// Discs were disjoint yet matching failed; the oracle contradicts the
    /// Gershgorin theorem, which means a solver bug or a tolerance problem.
    bool oracle_contradiction = false;

    std::vector<Complex> eigenvalues() const;
};

/// Residual tolerance applied to every pair: 1e-8 * (1 + ||A||_F).
double residual_tolerance(const DenseMatrix& a) noexcept;

/// Cyclic Jacobi for a real symmetric matrix. Sweeps until the off-diagonal
/// Frobenius norm is <= 1e-12 * ||A||_F, at most 100 sweeps.
///
/// Throws PreconditionError for complex or non-symmetric input and
/// NonConvergence (carrying the achieved off-norm) when sweeps run out.
SpectrumReport eig_symmetric(const DenseMatrix& a);

/// Real nonsymmetric solver: Householder reduction to upper Hessenberg form,
/// Francis double-shift QR for the eigenvalues, inverse iteration on the
/// Hessenberg form for the eigenvectors.
///
/// Throws NonConvergence if an eigenvalue fails to deflate within 100 QR
/// iterations, or an eigenvector misses the residual tolerance.
SpectrumReport eig_general(const DenseMatrix& a);

/// eig_symmetric for real symmetric input, eig_general for other real input.
SpectrumReport eig_auto(const DenseMatrix& a);

/// Assigns every eigenvalue to a disc.
///
/// First tries the nearest disc by |lambda - c| - r. If that is not a
/// bijection, falls back to a minimum-total-distance assignment (Hungarian
/// method on |lambda - c|). `matched` holds when the final assignment is a
/// bijection with every eigenvalue inside its disc (small tolerance).
SpectrumReport match_to_discs(SpectrumReport spectrum, const SeparationReport& report);

/// Minimum-cost perfect assignment on a square row-major cost matrix.
/// Returns assignment[row] = column.
std::vector<std::size_t> min_cost_assignment(std::size_t n, const std::vector<double>& cost);

}  // namespace wellsep
