#include "wellsep/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "wellsep/errors.hpp"
#include "wellsep/perturb.hpp"

namespace wellsep {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> average_ranks(const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> rank(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
        const double r = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) rank[order[k]] = r;
        i = j + 1;
    }
    return rank;
}

std::vector<Complex> by_disc(const SpectrumReport& s) {
    std::vector<Complex> out(s.pairs.size(), Complex(kNaN, kNaN));
    for (const auto& p : s.pairs) {
        if (p.disc_index) out[*p.disc_index] = p.eigenvalue;
    }
    return out;
}

}  // namespace

BoundsRun run_bounds(const DenseMatrix& a, double c, RadiusMode mode) {
    const DenseMatrix b = truncate_offdiag(a, c);
    BoundsRun run;
    run.report_a = separation_report(compute_discs(a), mode);
    run.report_b = separation_report(compute_discs(b), mode);
    run.spectrum_a = match_to_discs(eig_auto(a), run.report_a);
    run.spectrum_b = match_to_discs(eig_auto(b), run.report_b);

    const auto tilde = by_disc(run.spectrum_b);
    for (std::size_t j = 0; j < run.spectrum_a.pairs.size(); ++j) {
        const auto& p = run.spectrum_a.pairs[j];
        BoundRow row;
        row.eig_index = j;
        row.disc_index = *p.disc_index;
        const auto& disc = run.report_a.discs[row.disc_index];
        row.lambda = p.eigenvalue;
        row.lambda_tilde = tilde[row.disc_index];
        row.a = std::abs(disc.center);
        row.r1 = disc.radius(mode);
        row.r2 = run.report_b.discs[row.disc_index].radius(mode);
        try {
            row.rel_error = relative_error(row.lambda, row.lambda_tilde);
        } catch (const ZeroEigenvalue&) {
            row.rel_error = kNaN;
        }
        if (row.a > row.r1) {
            const auto reg = error_region(row.a, row.r1, row.r2, std::arg(disc.center));
            row.bound = reg.bound;
            row.shifted_center = reg.shifted_center;
        } else {
            row.bound = kNaN;
            row.shifted_center = kNaN;
        }
        run.rows.push_back(row);
    }
    return run;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw DimensionMismatch("spearman: length mismatch");
    const std::size_t n = x.size();
    if (n < 2) return kNaN;
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    const double mean = 0.5 * static_cast<double>(n + 1);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (rx[i] - mean) * (ry[i] - mean);
        sxx += (rx[i] - mean) * (rx[i] - mean);
        syy += (ry[i] - mean) * (ry[i] - mean);
    }
    if (sxx == 0.0 || syy == 0.0) return kNaN;
    return sxy / std::sqrt(sxx * syy);
}

TrendRun eigvec_trend(const DenseMatrix& a, const SpectrumReport& spectrum, RadiusMode mode) {
    if (spectrum.pairs.size() != a.size()) throw DimensionMismatch("eigvec_trend: spectrum size");
    TrendRun run;
    double best = -1.0;
    for (std::size_t j = 0; j < spectrum.pairs.size(); ++j) {
        const double m = std::abs(spectrum.pairs[j].eigenvalue);
        if (m > best) {
            best = m;
            run.eig_index = j;
        }
    }
    const auto& pair = spectrum.pairs[run.eig_index];
    run.lambda = pair.eigenvalue;
    const auto discs = compute_discs(a);

    std::vector<double> mags, inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
        TrendRow row;
        row.entry_index = i;
        row.abs_entry = std::abs(pair.eigenvector[i]);
        const double gap = std::abs(run.lambda - discs[i].center);
        row.inverse_gap = gap > 0.0 ? 1.0 / gap : std::numeric_limits<double>::infinity();
        try {
            row.trend_value = lemma_entry_bound(discs[i].center, discs[i].radius(mode), run.lambda);
        } catch (const CoincidentCenter&) {
            row.trend_value = kNaN;
        }
        mags.push_back(row.abs_entry);
        inv.push_back(row.inverse_gap);
        run.rows.push_back(row);
    }
    run.spearman = spearman(mags, inv);
    return run;
}

LemmaCheck check_lemma_bounds(const SpectrumReport& spectrum, const std::vector<GershgorinDisc>& discs,
                              RadiusMode mode, double tol) {
    LemmaCheck out;
    out.worst_excess = -std::numeric_limits<double>::infinity();
    for (const auto& p : spectrum.pairs) {
        if (!p.disc_index) throw PreconditionError("check_lemma_bounds: spectrum is not matched");
        for (std::size_t i = 0; i < p.eigenvector.size(); ++i) {
            if (i == *p.disc_index) continue;
            double cap = 0.0;
            try {
                cap = lemma_entry_bound(discs[i].center, discs[i].radius(mode), p.eigenvalue);
            } catch (const CoincidentCenter&) {
                continue;
            }
            const double excess = std::abs(p.eigenvector[i]) - cap;
            ++out.checked;
            if (excess > tol) ++out.violations;
            out.worst_excess = std::max(out.worst_excess, excess);
        }
    }
    return out;
}

ConditionRow run_condition(const DenseMatrix& a, const DenseMatrix& delta) {
    if (a.size() != delta.size()) throw DimensionMismatch("run_condition: A and Delta differ in size");
    ConditionRow row;
    row.n = a.size();
    const auto spec_a = match_to_discs(eig_auto(a), separation_report(compute_discs(a)));
    row.k_est = estimate_k(spec_a);
    row.kappa_computed = eigenvector_condition_number(spec_a);
    row.delta_norm = spectral_norm(delta);

    const DenseMatrix b = add(a, delta);
    const auto spec_b = match_to_discs(eig_auto(b), separation_report(compute_discs(b)));
    const auto la = by_disc(spec_a);
    const auto lb = by_disc(spec_b);
    for (std::size_t i = 0; i < la.size(); ++i) {
        row.max_eig_shift = std::max(row.max_eig_shift, std::abs(la[i] - lb[i]));
    }

    try {
        row.bound = condition_bound(row.n, row.k_est);
        row.bf_bound = corollary_bound(*row.bound, row.delta_norm);
        row.status = "ok";
    } catch (const InvalidRegime&) {
        row.bf_bound = kNaN;
        row.status = "InvalidRegime";
    }
    return row;
}

}  // namespace wellsep
