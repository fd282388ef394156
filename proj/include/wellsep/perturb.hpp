#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "wellsep/matrix.hpp"

namespace wellsep {

/// Spacing of the diagonal entries of a generated matrix: a_i = i*n or i*n^2.
enum class Spacing { linear, quadratic };

std::string_view to_string(Spacing s) noexcept;
Spacing parse_spacing(std::string_view name);

struct PerturbSpec {
    enum class Kind { offdiag_scale, structured_S };
    Kind kind = Kind::offdiag_scale;
    /// Off-diagonal multiplier c in [0, 1] for offdiag_scale.
    double factor = 0.5;
    /// Step for structured_S (B = A + t S).
    double t = 1.0;
    std::uint64_t seed = 42;
};

struct InterlaceResult {
    std::vector<double> base_eigs;
    std::vector<double> pert_eigs;
    bool interlaced = false;
    /// First i where lambda_i <= lambda_tilde_i <= lambda_{i+1} breaks.
    std::optional<std::size_t> first_violation;
    double slack = 0.0;
};

/// Symmetric matrix with diagonal a_i = i*n (linear) or i*n^2 (quadratic),
/// i = 1..n, and Gaussian off-diagonal entries scaled down (one common factor)
/// until every row radius is <= 0.4 * min(diagonal gap, smallest diagonal).
/// Discs come out disjoint and clear of the origin; the matrix is positive
/// definite by diagonal dominance. Needs n >= 2.
DenseMatrix gen_separated_symmetric(std::size_t n, Spacing spacing, std::uint64_t seed);

/// Upper Hessenberg matrix with diagonal a_i = i*n and uniform(0,1) entries
/// elsewhere in the pattern, each row scaled down to radius <= 0.4 n.
DenseMatrix gen_hessenberg_positive(std::size_t n, std::uint64_t seed);

/// Keeps the diagonal and multiplies every off-diagonal entry by c in [0, 1].
DenseMatrix truncate_offdiag(const DenseMatrix& a, double c);

/// Symmetric S with S(i,i) ~ U[0.5, 1.5] and S(i,j) = g/n, g standard normal,
/// clamped to |S(i,j)| <= 1/n. Needs n >= 2.
DenseMatrix gen_structured_S(std::size_t n, std::uint64_t seed);

/// offdiag_scale: truncate_offdiag(a, factor). structured_S: a + t * gen_structured_S(n, seed).
DenseMatrix apply_perturbation(const DenseMatrix& a, const PerturbSpec& spec);

/// Spectra of A and A + tS (both real symmetric), checked against
/// lambda_1 <= lt_1 <= lambda_2 <= lt_2 <= ... <= lambda_n <= lt_n with
/// slack 1e-9 (1 + ||A||_F).
InterlaceResult check_interlacing(const DenseMatrix& a, const DenseMatrix& s, double t);

}  // namespace wellsep
