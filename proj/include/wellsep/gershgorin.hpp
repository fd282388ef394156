#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "wellsep/matrix.hpp"

namespace wellsep {

/// Which off-diagonal absolute sum serves as the disc radius.
///
/// `row` and `col` are valid inclusion regions on their own. `min` takes the
/// smaller of the two per disc; it is used in bound arithmetic only and is
/// not an inclusion region in general.
enum class RadiusMode { row, col, min };

std::string_view to_string(RadiusMode mode) noexcept;
/// Throws PreconditionError on an unknown name.
RadiusMode parse_radius_mode(std::string_view name);

struct GershgorinDisc {
    std::size_t index = 0;
    Complex center;
    double row_radius = 0.0;
    double col_radius = 0.0;
    double min_radius = 0.0;

    double radius(RadiusMode mode) const noexcept;
    /// |z - center| <= radius + tol
    bool contains(Complex z, RadiusMode mode, double tol = 0.0) const noexcept;
};

struct SeparationReport {
    std::vector<GershgorinDisc> discs;
    RadiusMode radius_mode = RadiusMode::row;
    /// min over i != j of |c_i - c_j| - r_i - r_j; +inf for a single disc.
    double pairwise_gap = 0.0;
    bool disjoint = false;
    /// Every disc avoids the unit circle: ||c| - 1| > r.
    bool unit_circle_clear = false;
    /// Every disc excludes the origin: |c| > r.
    bool origin_clear = false;
    /// min_{i != j} |c_i - c_j| / n
    double sep_constant_linear = 0.0;
    /// min_{i != j} |c_i - c_j| / n^2
    double sep_constant_quadratic = 0.0;
    double max_radius = 0.0;
};

enum class SeparationOrder { none, linear, quadratic };

std::string_view to_string(SeparationOrder order) noexcept;

/// One disc per row of `a`; all three radii are filled in.
std::vector<GershgorinDisc> compute_discs(const DenseMatrix& a);

/// Throws PreconditionError for an empty disc list.
SeparationReport separation_report(const std::vector<GershgorinDisc>& discs,
                                   RadiusMode mode = RadiusMode::row);

/// Heuristic classification of the separation regime. Quadratic when
/// sep_constant_quadratic >= 1, linear when sep_constant_linear >= 1; either
/// also needs max_radius <= sep_constant_linear.
SeparationOrder classify_separation(const SeparationReport& report) noexcept;

}  // namespace wellsep
