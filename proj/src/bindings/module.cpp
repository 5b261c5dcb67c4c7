#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "disktrace/kernels.hpp"
#include "disktrace/operators.hpp"
#include "disktrace/quadrature.hpp"
#include "disktrace/series.hpp"
#include "disktrace/trace.hpp"
#include "disktrace/verify.hpp"
#include "disktrace/weights.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

using disktrace::kernels::KernelForm;
using disktrace::kernels::ReproducingCheckResult;
using disktrace::operators::BandedTruncation;
using disktrace::operators::BasisAction;
using disktrace::operators::NormBoundCertificate;
using disktrace::operators::ShiftOperator;
using disktrace::operators::ShiftWeights;
using disktrace::quadrature::DiskWeight;
using disktrace::series::Complex;
using disktrace::series::PowerSeries;
using disktrace::trace::TraceResult;
using disktrace::weights::WeightClass;
using disktrace::weights::WeightSequence;

PYBIND11_MODULE(_core, m) {
    m.doc() = "weighted-shift commutator traces, reproducing kernels and disk quadrature "
              "on rotation-invariant spaces over the unit disk";

    // ---- weights ----
    py::enum_<disktrace::weights::Shape>(m, "Shape")
        .value("convex", disktrace::weights::Shape::convex)
        .value("concave", disktrace::weights::Shape::concave)
        .value("affine", disktrace::weights::Shape::affine)
        .value("neither", disktrace::weights::Shape::neither);

    py::class_<WeightClass>(m, "WeightClass")
        .def_readonly("ratio_limit_ok", &WeightClass::ratio_limit_ok)
        .def_readonly("shape", &WeightClass::shape)
        .def_readonly("root_limsup_ok", &WeightClass::root_limsup_ok)
        .def_readonly("window_begin", &WeightClass::window_begin)
        .def_readonly("window_end", &WeightClass::window_end);

    py::class_<WeightSequence>(m, "WeightSequence")
        .def_static(
            "builtin",
            [](const std::string& name, const std::vector<double>& params) {
                return WeightSequence::builtin(name, params);
            },
            "name"_a, "params"_a = std::vector<double>{})
        .def_static(
            "custom",
            [](const std::string& name, std::int64_t start_index,
               const std::function<double(std::int64_t)>& gen) {
                return WeightSequence::custom(name, start_index, gen);
            },
            "name"_a, "start_index"_a, "generator"_a)
        .def("at", &WeightSequence::at, "n"_a, "alpha_n (zero below start_index)")
        .def("ratio", &WeightSequence::ratio, "n"_a, "alpha_{n+1}/alpha_n")
        .def_property_readonly("start_index", &WeightSequence::start_index)
        .def_property_readonly("name", &WeightSequence::name);

    m.def("classify", &disktrace::weights::classify, "w"_a, "n_test"_a = 10000,
          "tol"_a = 1e-12);

    // ---- series ----
    py::class_<PowerSeries>(m, "PowerSeries")
        .def(py::init<>())
        .def(py::init([](const std::vector<Complex>& coeffs) { return PowerSeries(coeffs); }),
             "coeffs"_a, "coefficients, lowest degree first")
        .def_static("monomial", &PowerSeries::monomial, "n"_a, "c"_a = Complex(1.0, 0.0))
        .def_property_readonly("degree", &PowerSeries::degree)
        .def("coeff", &PowerSeries::coeff, "n"_a)
        .def_property_readonly("coeffs",
                               [](const PowerSeries& f) { return f.coeffs(); });

    m.def("inner_product", &disktrace::series::inner_product, "f"_a, "g"_a, "w"_a);
    m.def("dirichlet_form", &disktrace::series::dirichlet_form, "f"_a, "g"_a);
    m.def("norm", &disktrace::series::norm, "f"_a, "w"_a);
    m.def("rotate", &disktrace::series::rotate, "f"_a, "theta"_a);
    m.def("evaluate", &disktrace::series::evaluate, "f"_a, "z"_a);

    // ---- operators ----
    py::class_<ShiftWeights>(m, "ShiftWeights")
        .def_static("unit", &ShiftWeights::unit)
        .def_static("parse", &ShiftWeights::parse, "spec"_a)
        .def_static("table", &ShiftWeights::table, "values"_a)
        .def("at", &ShiftWeights::at, "n"_a)
        .def_property_readonly("name", &ShiftWeights::name);

    py::class_<ShiftOperator>(m, "ShiftOperator")
        .def(py::init<WeightSequence, ShiftWeights>(), "alpha"_a,
             "r"_a = ShiftWeights::unit())
        .def_property_readonly("alpha", &ShiftOperator::alpha)
        .def_property_readonly("unilateral", &ShiftOperator::unilateral)
        .def_property_readonly("start_index", &ShiftOperator::start_index);

    py::class_<BasisAction>(m, "BasisAction")
        .def_readonly("target", &BasisAction::target)
        .def_readonly("coefficient", &BasisAction::coefficient);

    py::class_<NormBoundCertificate>(m, "NormBoundCertificate")
        .def_readonly("value", &NormBoundCertificate::value)
        .def_readonly("window_end", &NormBoundCertificate::window_end);

    m.def("shift_power_action", &disktrace::operators::shift_power_action, "op"_a, "m"_a, "n"_a);
    m.def("adjoint_power_action", &disktrace::operators::adjoint_power_action, "op"_a, "m"_a,
          "n"_a);
    m.def("shift_apply", &disktrace::operators::shift_apply, "op"_a, "f"_a);
    m.def("adjoint_apply", &disktrace::operators::adjoint_apply, "op"_a, "f"_a);
    m.def("adjoint_pairing_check", &disktrace::operators::adjoint_pairing_check, "op"_a, "f"_a,
          "g"_a);
    m.def("norm_bound", &disktrace::operators::norm_bound, "op"_a, "window_end"_a);
    m.def("commutator_diagonal", &disktrace::operators::commutator_diagonal, "op"_a, "m"_a,
          "n"_a);

    py::class_<BandedTruncation>(m, "BandedTruncation")
        .def_property_readonly("dim", &BandedTruncation::dim)
        .def("entry", &BandedTruncation::entry, "row"_a, "col"_a)
        .def("multiply", &BandedTruncation::multiply, "rhs"_a)
        .def("subtract", &BandedTruncation::subtract, "rhs"_a)
        .def("diagonal", &BandedTruncation::diagonal);

    m.def("truncate_polynomial_calculus", &disktrace::operators::truncate_polynomial_calculus,
          "f"_a, "op"_a, "dagger"_a, "dim"_a);

    // ---- trace ----
    py::enum_<disktrace::trace::Route>(m, "Route")
        .value("series", disktrace::trace::Route::series)
        .value("telescoped", disktrace::trace::Route::telescoped)
        .value("matrix", disktrace::trace::Route::matrix);

    py::class_<TraceResult>(m, "TraceResult")
        .def_readonly("value", &TraceResult::value)
        .def_readonly("partial_terms_used", &TraceResult::partial_terms_used)
        .def_readonly("tail_estimate", &TraceResult::tail_estimate)
        .def_readonly("route", &TraceResult::route)
        .def_readonly("converged", &TraceResult::converged)
        .def_readonly("diagnostic", &TraceResult::diagnostic);

    m.def("monomial_trace_series", &disktrace::trace::monomial_trace_series, "op"_a, "m"_a,
          "tol"_a, "n_max"_a = disktrace::trace::kDefaultTraceTermCap);
    m.def("monomial_trace_telescoped", &disktrace::trace::monomial_trace_telescoped, "op"_a,
          "m"_a, "tol"_a);
    m.def("telescoped_partial", &disktrace::trace::telescoped_partial, "op"_a, "m"_a, "N"_a);
    m.def("series_partial_sum", &disktrace::trace::series_partial_sum, "op"_a, "m"_a, "N"_a);
    m.def("bilinear_form", &disktrace::trace::bilinear_form, "f"_a, "g"_a, "op"_a, "tol"_a);
    m.def("dirichlet_oracle", &disktrace::trace::dirichlet_oracle, "f"_a, "g"_a);
    m.def("matrix_trace_check", &disktrace::trace::matrix_trace_check, "f"_a, "g"_a, "op"_a,
          "N"_a);

    // ---- kernels ----
    py::class_<KernelForm>(m, "KernelForm")
        .def_property_readonly("kind",
                               [](const KernelForm& kf) {
                                   return disktrace::kernels::closed_form_name(kf.kind);
                               })
        .def_readonly("table_start", &KernelForm::table_start);

    py::class_<ReproducingCheckResult>(m, "ReproducingCheckResult")
        .def_readonly("point_value", &ReproducingCheckResult::point_value)
        .def_readonly("kernel_pairing", &ReproducingCheckResult::kernel_pairing)
        .def_readonly("tol", &ReproducingCheckResult::tol)
        .def_readonly("passed", &ReproducingCheckResult::passed);

    m.def("kernel_series", &disktrace::kernels::kernel_series, "w"_a, "z"_a, "wpt"_a,
          "tol"_a = 1e-13);
    m.def("polylog", &disktrace::kernels::polylog, "s"_a, "z"_a, "tol"_a = 1e-14);
    m.def("kernel_form_for", &disktrace::kernels::kernel_form_for, "w"_a);
    m.def("closed_form_eval", &disktrace::kernels::closed_form_eval, "kf"_a, "zeta"_a);
    m.def("closed_form_total", &disktrace::kernels::closed_form_total, "kf"_a, "zeta"_a);
    m.def("kernel_n2n1", &disktrace::kernels::kernel_n2n1, "zeta"_a, "tol"_a = 1e-14);
    m.def("kernel_pf_beta2_k3", &disktrace::kernels::kernel_pf_beta2_k3, "gamma"_a, "zeta"_a,
          "tol"_a = 1e-14);
    m.def("kernel_pf_beta2_k3_series", &disktrace::kernels::kernel_pf_beta2_k3_series,
          "gamma"_a, "zeta"_a, "tol"_a = 1e-14);
    m.def("reproducing_check", &disktrace::kernels::reproducing_check, "w"_a, "f"_a, "wpt"_a,
          "tol"_a = 1e-10);

    // ---- quadrature ----
    py::class_<DiskWeight>(m, "DiskWeight")
        .def(py::init<double, double, int>(), "gamma"_a, "beta"_a, "k"_a)
        .def_readonly("gamma", &DiskWeight::gamma)
        .def_readonly("beta", &DiskWeight::beta)
        .def_readonly("k", &DiskWeight::k);

    py::enum_<disktrace::quadrature::QuadratureMode>(m, "QuadratureMode")
        .value("orthogonality", disktrace::quadrature::QuadratureMode::orthogonality)
        .value("grid", disktrace::quadrature::QuadratureMode::grid);

    m.def("disk_moment_analytic", &disktrace::quadrature::disk_moment_analytic, "dw"_a, "n"_a);
    m.def("disk_moment_numeric", &disktrace::quadrature::disk_moment_numeric, "dw"_a, "n"_a,
          "tol"_a = 1e-10);
    m.def("differentiate", &disktrace::quadrature::differentiate, "f"_a, "k"_a);
    m.def("weighted_inner_product_num", &disktrace::quadrature::weighted_inner_product_num,
          "f"_a, "g"_a, "dw"_a, "tol"_a = 1e-10,
          "mode"_a = disktrace::quadrature::QuadratureMode::orthogonality);
    m.def("dirichlet_integral_num", &disktrace::quadrature::dirichlet_integral_num, "f"_a,
          "g"_a, "tol"_a = 1e-10);

    // ---- verification matrix ----
    py::class_<disktrace::verify::CheckRow>(m, "CheckRow")
        .def_readonly("criterion", &disktrace::verify::CheckRow::criterion)
        .def_readonly("label", &disktrace::verify::CheckRow::label)
        .def_readonly("measured", &disktrace::verify::CheckRow::measured)
        .def_readonly("threshold", &disktrace::verify::CheckRow::threshold)
        .def_readonly("passed", &disktrace::verify::CheckRow::pass)
        .def_readonly("note", &disktrace::verify::CheckRow::note);

    m.def("run_criterion", &disktrace::verify::run_criterion, "k"_a);

#ifdef DISKTRACE_VERSION
    m.attr("__version__") = DISKTRACE_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
