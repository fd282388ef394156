#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "wellsep/bounds.hpp"
#include "wellsep/eigen.hpp"
#include "wellsep/errors.hpp"
#include "wellsep/gershgorin.hpp"
#include "wellsep/mmio.hpp"
#include "wellsep/perron.hpp"
#include "wellsep/perturb.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace wellsep;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

DenseMatrix to_matrix(const ComplexArray& arr, bool symmetric) {
    if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1)) {
        throw PreconditionError("expected a square 2-D array");
    }
    const auto n = static_cast<std::size_t>(arr.shape(0));
    std::vector<Complex> entries(arr.data(), arr.data() + n * n);
    return DenseMatrix(n, std::move(entries),
                       symmetric ? DenseMatrix::Symmetry::symmetric : DenseMatrix::Symmetry::general);
}

// Real matrices come back as float64, others as complex128.
py::array to_numpy(const DenseMatrix& a) {
    const auto n = static_cast<py::ssize_t>(a.size());
    if (a.is_real()) {
        py::array_t<double> out({n, n});
        auto* p = out.mutable_data();
        for (std::size_t k = 0; k < a.entries().size(); ++k) p[k] = a.entries()[k].real();
        return out;
    }
    py::array_t<Complex> out({n, n});
    std::copy(a.entries().begin(), a.entries().end(), out.mutable_data());
    return out;
}

// Matrix arguments accept any array-like; symmetric=True requests the tag.
DenseMatrix arg(const ComplexArray& arr, bool symmetric = false) { return to_matrix(arr, symmetric); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Gershgorin-disc relative error regions, bounds and reference eigensolvers";

    auto base = py::register_exception<Error>(m, "WellsepError", PyExc_RuntimeError);
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<NonConvergence>(m, "NonConvergence", base.ptr());
    py::register_exception<DegenerateDisc>(m, "DegenerateDisc", base.ptr());
    py::register_exception<InvalidRegime>(m, "InvalidRegime", base.ptr());
    py::register_exception<ZeroEigenvalue>(m, "ZeroEigenvalue", base.ptr());
    py::register_exception<CoincidentCenter>(m, "CoincidentCenter", base.ptr());
    py::register_exception<ShiftCollision>(m, "ShiftCollision", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<UnsupportedField>(m, "UnsupportedField", base.ptr());
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
    py::register_exception<IoError>(m, "IoError", base.ptr());

    py::enum_<RadiusMode>(m, "RadiusMode")
        .value("row", RadiusMode::row)
        .value("col", RadiusMode::col)
        .value("min", RadiusMode::min);
    py::enum_<Spacing>(m, "Spacing").value("linear", Spacing::linear).value("quadratic", Spacing::quadratic);
    py::enum_<StartKind>(m, "StartKind")
        .value("random", StartKind::random)
        .value("diagonal_seeded", StartKind::diagonal_seeded);

    py::class_<GershgorinDisc>(m, "GershgorinDisc")
        .def_readonly("index", &GershgorinDisc::index)
        .def_readonly("center", &GershgorinDisc::center)
        .def_readonly("row_radius", &GershgorinDisc::row_radius)
        .def_readonly("col_radius", &GershgorinDisc::col_radius)
        .def_readonly("min_radius", &GershgorinDisc::min_radius)
        .def("radius", &GershgorinDisc::radius, py::arg("mode"));

    py::class_<SeparationReport>(m, "SeparationReport")
        .def_readonly("discs", &SeparationReport::discs)
        .def_readonly("radius_mode", &SeparationReport::radius_mode)
        .def_readonly("pairwise_gap", &SeparationReport::pairwise_gap)
        .def_readonly("disjoint", &SeparationReport::disjoint)
        .def_readonly("unit_circle_clear", &SeparationReport::unit_circle_clear)
        .def_readonly("origin_clear", &SeparationReport::origin_clear)
        .def_readonly("sep_constant_linear", &SeparationReport::sep_constant_linear)
        .def_readonly("sep_constant_quadratic", &SeparationReport::sep_constant_quadratic)
        .def_readonly("max_radius", &SeparationReport::max_radius);

    py::class_<SpectralPair>(m, "SpectralPair")
        .def_readonly("eigenvalue", &SpectralPair::eigenvalue)
        .def_readonly("eigenvector", &SpectralPair::eigenvector)
        .def_readonly("disc_index", &SpectralPair::disc_index)
        .def_readonly("residual", &SpectralPair::residual);

    py::class_<SpectrumReport>(m, "SpectrumReport")
        .def_readonly("pairs", &SpectrumReport::pairs)
        .def_readonly("matched", &SpectrumReport::matched)
        .def_readonly("oracle_contradiction", &SpectrumReport::oracle_contradiction)
        .def("eigenvalues", &SpectrumReport::eigenvalues);

    py::class_<InvertedDisc>(m, "InvertedDisc")
        .def_readonly("center", &InvertedDisc::center)
        .def_readonly("radius", &InvertedDisc::radius);

    py::class_<ErrorRegion>(m, "ErrorRegion")
        .def_readonly("a", &ErrorRegion::a)
        .def_readonly("alpha", &ErrorRegion::alpha)
        .def_readonly("r1", &ErrorRegion::r1)
        .def_readonly("r2", &ErrorRegion::r2)
        .def_readonly("bound", &ErrorRegion::bound)
        .def_readonly("approx_center", &ErrorRegion::approx_center)
        .def_readonly("approx_radius", &ErrorRegion::approx_radius)
        .def_readonly("shifted_center", &ErrorRegion::shifted_center);

    py::class_<ConditionBound>(m, "ConditionBound")
        .def_readonly("n", &ConditionBound::n)
        .def_readonly("k", &ConditionBound::k)
        .def_readonly("kappa_bound", &ConditionBound::kappa_bound)
        .def_readonly("h_diag_lower", &ConditionBound::h_diag_lower)
        .def_readonly("h_diag_upper", &ConditionBound::h_diag_upper)
        .def_readonly("h_offdiag_upper", &ConditionBound::h_offdiag_upper)
        .def_readonly("h_radius_upper", &ConditionBound::h_radius_upper);

    py::class_<InterlaceResult>(m, "InterlaceResult")
        .def_readonly("base_eigs", &InterlaceResult::base_eigs)
        .def_readonly("pert_eigs", &InterlaceResult::pert_eigs)
        .def_readonly("interlaced", &InterlaceResult::interlaced)
        .def_readonly("first_violation", &InterlaceResult::first_violation);

    py::class_<PowerTrace>(m, "PowerTrace")
        .def_readonly("start_kind", &PowerTrace::start_kind)
        .def_readonly("K", &PowerTrace::K)
        .def_readonly("iterations", &PowerTrace::iterations)
        .def_readonly("error_log", &PowerTrace::error_log)
        .def_readonly("converged", &PowerTrace::converged)
        .def_readonly("dominant_value", &PowerTrace::dominant_value)
        .def_readonly("dominant_vector", &PowerTrace::dominant_vector);

    py::class_<StartComparison>(m, "StartComparison")
        .def_readonly("mean_random", &StartComparison::mean_random)
        .def_readonly("mean_seeded", &StartComparison::mean_seeded)
        .def_readonly("median_random", &StartComparison::median_random)
        .def_readonly("median_seeded", &StartComparison::median_seeded)
        .def_readonly("mean_saving", &StartComparison::mean_saving)
        .def_readonly("excluded", &StartComparison::excluded);

    m.def("compute_discs", [](const ComplexArray& a) { return compute_discs(arg(a)); }, py::arg("a"));
    m.def("separation_report", &separation_report, py::arg("discs"), py::arg("mode") = RadiusMode::row);
    m.def("eig_symmetric", [](const ComplexArray& a) { return eig_symmetric(arg(a)); }, py::arg("a"));
    m.def("eig_general", [](const ComplexArray& a) { return eig_general(arg(a)); }, py::arg("a"));
    m.def("match_to_discs", &match_to_discs, py::arg("spectrum"), py::arg("report"));

    m.def("invert_disc", &invert_disc, py::arg("a"), py::arg("alpha"), py::arg("r1"));
    m.def("error_region", &error_region, py::arg("a"), py::arg("r1"), py::arg("r2"), py::arg("alpha") = 0.0);
    m.def("oval_sample", &oval_sample, py::arg("region"), py::arg("theta"), py::arg("eta"));
    m.def("relative_error", &relative_error, py::arg("lam"), py::arg("lam_tilde"));
    m.def("lemma_entry_bound", &lemma_entry_bound, py::arg("a_i"), py::arg("r_i"), py::arg("lam"));
    m.def("estimate_k", &estimate_k, py::arg("spectrum"));
    m.def("condition_bound", &condition_bound, py::arg("n"), py::arg("k"));
    m.def("corollary_bound", &corollary_bound, py::arg("cond"), py::arg("delta_norm"));
    m.def("spectral_norm", [](const ComplexArray& d) { return spectral_norm(arg(d)); }, py::arg("d"));
    m.def("eigenvector_condition_number", &eigenvector_condition_number, py::arg("spectrum"));

    m.def("gen_separated_symmetric",
          [](std::size_t n, Spacing s, std::uint64_t seed) { return to_numpy(gen_separated_symmetric(n, s, seed)); },
          py::arg("n"), py::arg("sep") = Spacing::linear, py::arg("seed") = 42);
    m.def("gen_hessenberg_positive",
          [](std::size_t n, std::uint64_t seed) { return to_numpy(gen_hessenberg_positive(n, seed)); },
          py::arg("n"), py::arg("seed") = 42);
    m.def("gen_structured_S", [](std::size_t n, std::uint64_t seed) { return to_numpy(gen_structured_S(n, seed)); },
          py::arg("n"), py::arg("seed") = 42);
    m.def("truncate_offdiag",
          [](const ComplexArray& a, double c) { return to_numpy(truncate_offdiag(arg(a), c)); },
          py::arg("a"), py::arg("c"));
    m.def("check_interlacing",
          [](const ComplexArray& a, const ComplexArray& s, double t) {
              return check_interlacing(arg(a), arg(s), t);
          },
          py::arg("a"), py::arg("s"), py::arg("t"));

    m.def("perron_seed", [](const ComplexArray& a, double K) { return perron_seed(arg(a), K); }, py::arg("a"),
          py::arg("K"));
    m.def("power_method",
          [](const ComplexArray& a, std::vector<double> start, double tol, std::size_t max_iter) {
              return power_method(arg(a), std::move(start), tol, max_iter);
          },
          py::arg("a"), py::arg("start"), py::arg("tol") = 1e-8, py::arg("max_iter") = 10000);
    m.def("gen_perron_test", [](std::size_t n, std::uint64_t seed) { return to_numpy(gen_perron_test(n, seed)); },
          py::arg("n"), py::arg("seed") = 42);
    m.def("compare_starts", &compare_starts, py::arg("n"), py::arg("trials"), py::arg("K") = py::none(),
          py::arg("tol") = 1e-8, py::arg("seed") = 42, py::arg("max_iter") = 10000);

    m.def("read_matrix_market",
          [](const std::filesystem::path& p) { return to_numpy(read_matrix_market(p)); }, py::arg("path"));
    m.def("write_matrix_market",
          [](const ComplexArray& a, const std::filesystem::path& p, bool symmetric) {
              write_matrix_market(arg(a, symmetric), p);
          },
          py::arg("a"), py::arg("path"), py::arg("symmetric") = false);

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
