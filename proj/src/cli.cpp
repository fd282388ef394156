#include "wellsep/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "wellsep/errors.hpp"
#include "wellsep/experiments.hpp"
#include "wellsep/gershgorin.hpp"
#include "wellsep/mmio.hpp"
#include "wellsep/perron.hpp"
#include "wellsep/perturb.hpp"
#include "wellsep/table.hpp"

#ifndef WELLSEP_VERSION
#define WELLSEP_VERSION "dev"
#endif

namespace wellsep {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct GlobalOptions {
    std::uint64_t seed = 42;
    std::string radius_mode = "row";
    std::string out_path;
    std::string format = "csv";
};

struct Context {
    GlobalOptions global;
    std::ostream& out;
    std::ostream& err;

    RadiusMode mode() const { return parse_radius_mode(global.radius_mode); }
    TableFormat format() const { return parse_table_format(global.format); }

    void stamp(ResultTable& t, const std::string& command, const std::string& input_hash) const {
        t.set_meta("command", command);
        t.set_meta("radius_mode", global.radius_mode);
        t.set_meta("seed", std::to_string(global.seed));
        t.set_meta("tool_version", WELLSEP_VERSION);
        t.set_meta("input_hash", input_hash);
        t.set_meta("format", global.format);
    }

    void emit(const ResultTable& t) const {
        if (global.out_path.empty()) {
            write_table(t, format(), out);
        } else {
            write_table(t, format(), std::filesystem::path(global.out_path));
        }
    }
};

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string complex_str(Complex z) { return format_real(z.real()) + (z.imag() < 0 ? "" : "+") + format_real(z.imag()) + "i"; }

std::int64_t as_index(std::size_t v) { return static_cast<std::int64_t>(v); }

void stamp_separation(ResultTable& t, const SeparationReport& r, const std::string& prefix = "") {
    t.set_meta(prefix + "pairwise_gap", format_real(r.pairwise_gap));
    t.set_meta(prefix + "disjoint", bool_str(r.disjoint));
    t.set_meta(prefix + "unit_circle_clear", bool_str(r.unit_circle_clear));
    t.set_meta(prefix + "origin_clear", bool_str(r.origin_clear));
    t.set_meta(prefix + "sep_constant_linear", format_real(r.sep_constant_linear));
    t.set_meta(prefix + "sep_constant_quadratic", format_real(r.sep_constant_quadratic));
    t.set_meta(prefix + "max_radius", format_real(r.max_radius));
    t.set_meta(prefix + "separation_order", std::string(to_string(classify_separation(r))));
}

int cmd_discs(const Context& ctx, const std::string& file) {
    const DenseMatrix a = read_matrix_market(std::filesystem::path(file));
    const auto report = separation_report(compute_discs(a), ctx.mode());
    ResultTable t("discs", {{"index", ColumnType::index},
                            {"center", ColumnType::complex},
                            {"row_radius", ColumnType::real},
                            {"col_radius", ColumnType::real},
                            {"min_radius", ColumnType::real},
                            {"radius", ColumnType::real}});
    for (const auto& d : report.discs) {
        t.add_row({as_index(d.index), d.center, d.row_radius, d.col_radius, d.min_radius,
                   d.radius(ctx.mode())});
    }
    ctx.stamp(t, "discs", file_hash(file));
    t.set_meta("matrix", file);
    t.set_meta("n", std::to_string(a.size()));
    stamp_separation(t, report);
    ctx.emit(t);
    return kExitOk;
}

int cmd_bounds(const Context& ctx, const std::string& file, double c, const std::string& trend_path) {
    const DenseMatrix a = read_matrix_market(std::filesystem::path(file));
    const std::string hash = file_hash(file);
    const auto run = run_bounds(a, c, ctx.mode());
    if (!run.report_a.disjoint) {
        ctx.err << "warning: Gershgorin discs (" << to_string(ctx.mode())
                << " radii) overlap; the relative error bound is not guaranteed\n";
    }
    if (run.spectrum_a.oracle_contradiction || run.spectrum_b.oracle_contradiction) {
        ctx.err << "warning: eigenvalues do not match disjoint discs one to one\n";
    }

    ResultTable t("error_bounds", {{"eig_index", ColumnType::index},
                                   {"lambda", ColumnType::complex},
                                   {"rel_error", ColumnType::real},
                                   {"bound", ColumnType::real},
                                   {"approx_center_shifted", ColumnType::real}});
    std::size_t within = 0;
    for (const auto& r : run.rows) {
        t.add_row({as_index(r.eig_index), r.lambda, r.rel_error, r.bound, r.shifted_center});
        if (r.rel_error <= r.bound) ++within;
    }
    ctx.stamp(t, "bounds", hash);
    t.set_meta("matrix", file);
    t.set_meta("n", std::to_string(a.size()));
    t.set_meta("truncate", format_real(c));
    t.set_meta("matched_a", bool_str(run.spectrum_a.matched));
    t.set_meta("matched_b", bool_str(run.spectrum_b.matched));
    t.set_meta("rows_within_bound", std::to_string(within));
    t.set_meta("rows_total", std::to_string(run.rows.size()));
    t.set_meta("eigvec_trend", trend_path.empty() ? "off" : trend_path);
    stamp_separation(t, run.report_a);
    ctx.emit(t);

    if (!trend_path.empty()) {
        const auto trend = eigvec_trend(a, run.spectrum_a, ctx.mode());
        ResultTable tt("eigvec_trend", {{"entry_index", ColumnType::index},
                                        {"abs_entry", ColumnType::real},
                                        {"trend_value", ColumnType::real}});
        for (const auto& r : trend.rows) tt.add_row({as_index(r.entry_index), r.abs_entry, r.trend_value});
        ctx.stamp(tt, "bounds", hash);
        tt.set_meta("matrix", file);
        tt.set_meta("eig_index", std::to_string(trend.eig_index));
        tt.set_meta("lambda", complex_str(trend.lambda));
        tt.set_meta("spearman_inverse_gap", format_real(trend.spearman));
        write_table(tt, ctx.format(), std::filesystem::path(trend_path));
    }
    return kExitOk;
}

int cmd_interlace(const Context& ctx, std::size_t n, double t_step, std::size_t trials) {
    ResultTable t("interlace", {{"trial", ColumnType::index},
                                {"matrix_seed", ColumnType::index},
                                {"t", ColumnType::real},
                                {"interlaced", ColumnType::string},
                                {"first_violation", ColumnType::index},
                                {"min_shift", ColumnType::real}});
    bool all = true;
    for (std::size_t k = 0; k < trials; ++k) {
        const std::uint64_t seed_a = ctx.global.seed + 2 * k;
        const DenseMatrix a = gen_separated_symmetric(n, Spacing::linear, seed_a);
        const DenseMatrix s = gen_structured_S(n, seed_a + 1);
        const auto res = check_interlacing(a, s, t_step);
        double min_shift = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) min_shift = std::min(min_shift, res.pert_eigs[i] - res.base_eigs[i]);
        all = all && res.interlaced;
        t.add_row({as_index(k), static_cast<std::int64_t>(seed_a), t_step, bool_str(res.interlaced),
                   res.first_violation ? as_index(*res.first_violation) : std::int64_t{-1}, min_shift});
    }
    ctx.stamp(t, "interlace", "generated");
    t.set_meta("n", std::to_string(n));
    t.set_meta("t", format_real(t_step));
    t.set_meta("trials", std::to_string(trials));
    t.set_meta("all_interlaced", bool_str(all));
    ctx.emit(t);
    return kExitOk;
}

int cmd_condition(const Context& ctx, std::size_t n, std::size_t trials, const std::string& matrix_file,
                  double delta_scale) {
    ResultTable t("condition", {{"trial", ColumnType::index},
                                {"n", ColumnType::index},
                                {"k_est", ColumnType::real},
                                {"kappa_computed", ColumnType::real},
                                {"kappa_bound", ColumnType::real},
                                {"delta_norm", ColumnType::real},
                                {"bf_bound", ColumnType::real},
                                {"max_eig_shift", ColumnType::real},
                                {"status", ColumnType::string}});
    auto add = [&](std::size_t trial, const ConditionRow& r) {
        t.add_row({as_index(trial), as_index(r.n), r.k_est, r.kappa_computed,
                   r.bound ? r.bound->kappa_bound : kNaN, r.delta_norm, r.bf_bound, r.max_eig_shift,
                   r.status});
    };
    std::string hash = "generated";
    if (!matrix_file.empty()) {
        const DenseMatrix a = read_matrix_market(std::filesystem::path(matrix_file));
        hash = file_hash(matrix_file);
        const DenseMatrix delta = scaled(gen_structured_S(a.size(), ctx.global.seed), delta_scale);
        add(0, run_condition(a, delta));
        t.set_meta("matrix", matrix_file);
        t.set_meta("n", std::to_string(a.size()));
    } else {
        for (std::size_t k = 0; k < trials; ++k) {
            const std::uint64_t seed_a = ctx.global.seed + 2 * k;
            const DenseMatrix a = gen_separated_symmetric(n, Spacing::quadratic, seed_a);
            const DenseMatrix delta = scaled(gen_structured_S(n, seed_a + 1), delta_scale);
            add(k, run_condition(a, delta));
        }
        t.set_meta("n", std::to_string(n));
        t.set_meta("trials", std::to_string(trials));
    }
    ctx.stamp(t, "condition", hash);
    t.set_meta("delta_scale", format_real(delta_scale));
    ctx.emit(t);
    return kExitOk;
}

int cmd_perron(const Context& ctx, std::size_t n, std::size_t trials, std::optional<double> K, double tol,
               std::size_t max_iter) {
    const auto cmp = compare_starts(n, trials, K, tol, ctx.global.seed, max_iter);
    ResultTable t("perron_trace", {{"trial", ColumnType::index},
                                   {"start_kind", ColumnType::string},
                                   {"iteration", ColumnType::index},
                                   {"residual", ColumnType::real}});
    for (const auto& tr : cmp.trials) {
        for (const PowerTrace* p : {&tr.random, &tr.seeded}) {
            for (std::size_t k = 0; k < p->error_log.size(); ++k) {
                t.add_row({as_index(tr.trial), std::string(to_string(p->start_kind)), as_index(k + 1),
                           p->error_log[k]});
            }
        }
    }
    ctx.stamp(t, "perron", "generated");
    t.set_meta("n", std::to_string(n));
    t.set_meta("trials", std::to_string(trials));
    t.set_meta("K", K ? format_real(*K) : std::string("2*max_diag"));
    t.set_meta("tol", format_real(tol));
    t.set_meta("max_iter", std::to_string(max_iter));
    t.set_meta("mean_iterations_random", format_real(cmp.mean_random));
    t.set_meta("mean_iterations_seeded", format_real(cmp.mean_seeded));
    t.set_meta("median_iterations_random", format_real(cmp.median_random));
    t.set_meta("median_iterations_seeded", format_real(cmp.median_seeded));
    t.set_meta("mean_saving", format_real(cmp.mean_saving));
    t.set_meta("excluded_trials", std::to_string(cmp.excluded));
    ctx.emit(t);
    ctx.err << "perron: mean iterations random " << format_real(cmp.mean_random) << ", seeded "
            << format_real(cmp.mean_seeded) << ", mean saving " << format_real(cmp.mean_saving)
            << ", excluded " << cmp.excluded << '\n';
    return kExitOk;
}

int cmd_generate(const Context& ctx, const std::string& family, std::size_t n, const std::string& sep) {
    const std::uint64_t seed = ctx.global.seed;
    DenseMatrix a;
    if (family == "sep-sym") {
        a = gen_separated_symmetric(n, parse_spacing(sep), seed);
    } else if (family == "hessenberg") {
        a = gen_hessenberg_positive(n, seed);
    } else if (family == "perron") {
        a = gen_perron_test(n, seed);
    } else {
        a = gen_structured_S(n, seed);
    }
    const std::vector<std::string> comments = {
        "family=" + family, "n=" + std::to_string(n), "sep=" + sep, "seed=" + std::to_string(seed),
        "tool_version=" WELLSEP_VERSION};
    if (ctx.global.out_path.empty()) {
        write_matrix_market(a, ctx.out, comments);
    } else {
        write_matrix_market(a, std::filesystem::path(ctx.global.out_path), comments);
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gershgorin-disc eigenvalue perturbation toolkit", "wellsep"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
    app.add_option("--radius-mode", g.radius_mode, "Disc radius: row, col or min")
        ->check(CLI::IsMember({"row", "col", "min"}))
        ->capture_default_str();
    app.add_option("--out", g.out_path, "Output file (default: stdout)");
    app.add_option("--format", g.format, "Table format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    std::string matrix_file;
    auto* discs = app.add_subcommand("discs", "Gershgorin discs and separation report");
    discs->add_option("matrix", matrix_file, "Matrix Market file")->required();

    double truncate = 0.5;
    std::string trend_path;
    auto* bounds = app.add_subcommand("bounds", "Relative errors against the disc bound after off-diagonal truncation");
    bounds->add_option("matrix", matrix_file, "Matrix Market file")->required();
    bounds->add_option("--truncate", truncate, "Off-diagonal multiplier c")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    bounds->add_option("--eigvec-trend", trend_path, "Also write the eigvec_trend table to this file");

    std::size_t n_interlace = 50;
    double t_step = 1.0;
    std::size_t trials_interlace = 20;
    auto* interlace = app.add_subcommand("interlace", "Interlacing of A and A + tS spectra");
    interlace->add_option("--n", n_interlace)->check(CLI::Range(2, 100000))->capture_default_str();
    interlace->add_option("--t", t_step)->check(CLI::Range(0.0, 1.0))->capture_default_str();
    interlace->add_option("--trials", trials_interlace)->check(CLI::PositiveNumber)->capture_default_str();

    std::size_t n_cond = 20;
    std::size_t trials_cond = 10;
    double delta_scale = 0.01;
    std::string cond_matrix;
    auto* condition = app.add_subcommand("condition", "Eigenvector condition number against its bound");
    condition->add_option("--n", n_cond)->check(CLI::Range(2, 100000))->capture_default_str();
    condition->add_option("--trials", trials_cond)->check(CLI::PositiveNumber)->capture_default_str();
    condition->add_option("--matrix", cond_matrix, "Use this Matrix Market file instead of generated matrices");
    condition->add_option("--delta-scale", delta_scale, "Perturbation is this multiple of a structured S")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    std::size_t n_perron = 100;
    std::size_t trials_perron = 50;
    std::optional<double> shift;
    double tol = 1e-8;
    std::size_t max_iter = 10000;
    auto* perron = app.add_subcommand("perron", "Power method: diagonal-seeded vs random start");
    perron->add_option("--n", n_perron)->check(CLI::Range(2, 100000))->capture_default_str();
    perron->add_option("--trials", trials_perron)->check(CLI::PositiveNumber)->capture_default_str();
    perron->add_option("--K", shift, "Seed shift (default 2 * max diagonal)");
    perron->add_option("--tol", tol)->check(CLI::PositiveNumber)->capture_default_str();
    perron->add_option("--max-iter", max_iter)->check(CLI::PositiveNumber)->capture_default_str();

    std::string family;
    std::size_t n_gen = 10;
    std::string sep = "linear";
    auto* generate = app.add_subcommand("generate", "Write a generated matrix in Matrix Market array format");
    generate->add_option("--family", family)
        ->required()
        ->check(CLI::IsMember({"sep-sym", "hessenberg", "perron", "S"}));
    generate->add_option("--n", n_gen)->check(CLI::Range(2, 100000))->capture_default_str();
    generate->add_option("--sep", sep)->check(CLI::IsMember({"linear", "quadratic"}))->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    const Context ctx{g, out, err};
    try {
        if (discs->parsed()) return cmd_discs(ctx, matrix_file);
        if (bounds->parsed()) return cmd_bounds(ctx, matrix_file, truncate, trend_path);
        if (interlace->parsed()) return cmd_interlace(ctx, n_interlace, t_step, trials_interlace);
        if (condition->parsed()) return cmd_condition(ctx, n_cond, trials_cond, cond_matrix, delta_scale);
        if (perron->parsed()) return cmd_perron(ctx, n_perron, trials_perron, shift, tol, max_iter);
        if (generate->parsed()) return cmd_generate(ctx, family, n_gen, sep);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const UnsupportedField& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const NonConvergence& e) {
        err << "error: " << e.what() << '\n';
        return kExitNonConvergence;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    }
    return kExitInputError;
}

}  // namespace wellsep
