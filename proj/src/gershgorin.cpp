#include "wellsep/gershgorin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wellsep/errors.hpp"

namespace wellsep {

std::string_view to_string(RadiusMode mode) noexcept {
    switch (mode) {
        case RadiusMode::row: return "row";
        case RadiusMode::col: return "col";
        case RadiusMode::min: return "min";
    }
    return "row";
}

RadiusMode parse_radius_mode(std::string_view name) {
    if (name == "row") return RadiusMode::row;
    if (name == "col") return RadiusMode::col;
    if (name == "min") return RadiusMode::min;
    throw PreconditionError("unknown radius mode '" + std::string(name) + "'");
}

std::string_view to_string(SeparationOrder order) noexcept {
    switch (order) {
        case SeparationOrder::none: return "none";
        case SeparationOrder::linear: return "linear";
        case SeparationOrder::quadratic: return "quadratic";
    }
    return "none";
}

double GershgorinDisc::radius(RadiusMode mode) const noexcept {
    switch (mode) {
        case RadiusMode::row: return row_radius;
        case RadiusMode::col: return col_radius;
        case RadiusMode::min: return min_radius;
    }
    return row_radius;
}

bool GershgorinDisc::contains(Complex z, RadiusMode mode, double tol) const noexcept {
    return std::abs(z - center) <= radius(mode) + tol;
}

std::vector<GershgorinDisc> compute_discs(const DenseMatrix& a) {
    const std::size_t n = a.size();
    std::vector<GershgorinDisc> discs(n);
    for (std::size_t i = 0; i < n; ++i) {
        discs[i].index = i;
        discs[i].center = a(i, i);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double m = std::abs(a(i, j));
            discs[i].row_radius += m;
            discs[j].col_radius += m;
        }
    }
    for (auto& d : discs) d.min_radius = std::min(d.row_radius, d.col_radius);
    return discs;
}

SeparationReport separation_report(const std::vector<GershgorinDisc>& discs, RadiusMode mode) {
    if (discs.empty()) throw PreconditionError("separation_report: empty disc list");
    constexpr double inf = std::numeric_limits<double>::infinity();

    SeparationReport rep;
    rep.discs = discs;
    rep.radius_mode = mode;
    rep.pairwise_gap = inf;
    rep.unit_circle_clear = true;
    rep.origin_clear = true;

    double min_center_gap = inf;
    for (std::size_t i = 0; i < discs.size(); ++i) {
        const double ri = discs[i].radius(mode);
        const double mod = std::abs(discs[i].center);
        rep.max_radius = std::max(rep.max_radius, ri);
        if (!(std::abs(mod - 1.0) > ri)) rep.unit_circle_clear = false;
        if (!(mod > ri)) rep.origin_clear = false;
        for (std::size_t j = i + 1; j < discs.size(); ++j) {
            const double d = std::abs(discs[i].center - discs[j].center);
            min_center_gap = std::min(min_center_gap, d);
            rep.pairwise_gap = std::min(rep.pairwise_gap, d - ri - discs[j].radius(mode));
        }
    }
    const auto n = static_cast<double>(discs.size());
    rep.disjoint = rep.pairwise_gap > 0.0;
    rep.sep_constant_linear = min_center_gap / n;
    rep.sep_constant_quadratic = rep.sep_constant_linear / n;
    return rep;
}

SeparationOrder classify_separation(const SeparationReport& report) noexcept {
    if (report.max_radius > report.sep_constant_linear) return SeparationOrder::none;
    if (report.sep_constant_quadratic >= 1.0) return SeparationOrder::quadratic;
    if (report.sep_constant_linear >= 1.0) return SeparationOrder::linear;
    return SeparationOrder::none;
}

}  // namespace wellsep
