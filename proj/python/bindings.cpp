#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tomox/affine.hpp"
#include "tomox/fft.hpp"
#include "tomox/io.hpp"
#include "tomox/quasidist.hpp"
#include "tomox/relations.hpp"
#include "tomox/symplectic.hpp"
#include "tomox/verify.hpp"
#include "tomox/wavelet.hpp"

namespace py = pybind11;
using namespace tomox;

namespace {

py::array_t<std::complex<double>> to_numpy_1d(const std::vector<cd>& v) {
    py::array_t<std::complex<double>> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

py::array_t<std::complex<double>> to_numpy_2d(const std::vector<cd>& v, std::size_t rows,
                                              std::size_t cols) {
    py::array_t<std::complex<double>> out({static_cast<py::ssize_t>(rows),
                                           static_cast<py::ssize_t>(cols)});
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

py::array_t<double> to_numpy_2d_real(const std::vector<double>& v, std::size_t rows,
                                     std::size_t cols) {
    py::array_t<double> out({static_cast<py::ssize_t>(rows), static_cast<py::ssize_t>(cols)});
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

std::vector<cd> from_numpy(const py::array_t<std::complex<double>>& a) {
    auto buf = a.request();
    if (buf.ndim != 1) throw invalid_argument_error("expected a 1-D complex array");
    const auto* p = static_cast<const std::complex<double>*>(buf.ptr);
    return {p, p + buf.shape[0]};
}

}  // namespace

PYBIND11_MODULE(_tomox, m) {
    m.doc() = "tomograms, quasidistributions, and wavelet-type transforms";

    py::register_exception<invalid_argument_error>(m, "InvalidArgumentError",
                                                   PyExc_ValueError);
    py::register_exception<incompatible_grids_error>(m, "IncompatibleGridsError",
                                                     PyExc_ValueError);
    py::register_exception<domain_tag_error>(m, "DomainError", PyExc_ValueError);
    py::register_exception<degenerate_input_error>(m, "DegenerateInputError", PyExc_ValueError);
    py::register_exception<ill_conditioned_error>(m, "IllConditionedError",
                                                  PyExc_ArithmeticError);
    py::register_exception<non_admissible_wavelet_error>(m, "NonAdmissibleWaveletError",
                                                         PyExc_ValueError);

    py::class_<Axis>(m, "Axis")
        .def(py::init([](double start, double step, std::int64_t count) {
                 return make_axis(start, step, count);
             }),
             py::arg("start"), py::arg("step"), py::arg("count"))
        .def_readonly("start", &Axis::start)
        .def_readonly("step", &Axis::step)
        .def_readonly("count", &Axis::count)
        .def("points",
             [](const Axis& a) {
                 py::array_t<double> out(static_cast<py::ssize_t>(a.count));
                 for (std::int64_t i = 0; i < a.count; ++i) out.mutable_data()[i] = a.at(i);
                 return out;
             })
        .def("__repr__", [](const Axis& a) {
            return "Axis(" + format_double(a.start) + ", " + format_double(a.step) + ", " +
                   std::to_string(a.count) + ")";
        });

    py::enum_<Domain>(m, "Domain").value("time", Domain::time).value("frequency",
                                                                     Domain::frequency);

    py::class_<SignalKind>(m, "SignalKind")
        .def_static("gaussian", &SignalKind::gaussian)
        .def_static("gabor_wavelet", &SignalKind::gabor_wavelet, py::arg("w0"))
        .def_static("mexican_hat", &SignalKind::mexican_hat)
        .def_static("chirp", &SignalKind::chirp, py::arg("a"), py::arg("b"))
        .def_static("two_tone", &SignalKind::two_tone, py::arg("w1"), py::arg("w2"))
        .def_static("parse", &parse_signal_kind, py::arg("text"))
        .def("name", &SignalKind::name);

    py::class_<SampledSignal>(m, "SampledSignal")
        .def(py::init([](const Axis& axis, const py::array_t<std::complex<double>>& values,
                         Domain domain) {
                 SampledSignal f;
                 f.axis = axis;
                 f.values = from_numpy(values);
                 if (static_cast<std::int64_t>(f.values.size()) != axis.count)
                     throw invalid_argument_error("value count does not match axis");
                 f.domain = domain;
                 return f;
             }),
             py::arg("axis"), py::arg("values"), py::arg("domain") = Domain::time)
        .def_readonly("axis", &SampledSignal::axis)
        .def_readonly("domain", &SampledSignal::domain)
        .def_readonly("warnings", &SampledSignal::warnings)
        .def_property_readonly(
            "values", [](const SampledSignal& f) { return to_numpy_1d(f.values); });

    m.def("synthesize", &synthesize, py::arg("kind"), py::arg("axis"),
          py::arg("normalize") = false);
    m.def("inner_product", &inner_product);
    m.def("squared_norm", &squared_norm);
    m.def("normalize", &normalize);
    m.def("fourier_transform", &fourier_transform, py::arg("f"), py::arg("out_axis"));
    m.def("phase_aligned_rel_l2", &phase_aligned_rel_l2, py::arg("reference"),
          py::arg("candidate"));
    m.def("resample",
          [](const SampledSignal& f, const Axis& axis) {
              SampledSignal out;
              out.axis = axis;
              out.domain = f.domain;
              out.values = resample_uniform(f, axis.start, axis.step,
                                            static_cast<std::size_t>(axis.count));
              return out;
          },
          py::arg("f"), py::arg("axis"));

    py::enum_<Interp>(m, "Interp").value("sinc", Interp::sinc).value("linear", Interp::linear);

    py::enum_<PhasePlaneKind>(m, "PhasePlaneKind")
        .value("wigner_ville", PhasePlaneKind::wigner_ville)
        .value("ambiguity", PhasePlaneKind::ambiguity)
        .value("affine", PhasePlaneKind::affine)
        .value("husimi", PhasePlaneKind::husimi);

    py::class_<PhasePlaneField>(m, "PhasePlaneField")
        .def_readonly("axis1", &PhasePlaneField::axis1)
        .def_readonly("axis2", &PhasePlaneField::axis2)
        .def_readonly("kind", &PhasePlaneField::kind)
        .def_readonly("warnings", &PhasePlaneField::warnings)
        .def_property_readonly("values", [](const PhasePlaneField& f) {
            return to_numpy_2d(f.values, f.n1(), f.n2());
        });

    m.def("wigner_ville", &wigner_ville, py::arg("f"), py::arg("tau_axis"),
          py::arg("omega_axis"), py::arg("method") = Interp::sinc);
    m.def("ambiguity", &ambiguity, py::arg("f"), py::arg("mu_axis"), py::arg("nu_axis"),
          py::arg("method") = Interp::sinc);
    m.def("ambiguity_value", &ambiguity_value, py::arg("f"), py::arg("mu"), py::arg("nu"),
          py::arg("method") = Interp::sinc);
    m.def("affine_quasidistribution", &affine_quasidistribution, py::arg("f"),
          py::arg("s_axis"), py::arg("tau_axis"), py::arg("method") = Interp::sinc);
    m.def("affine_quasidistribution_value", &affine_quasidistribution_value, py::arg("f"),
          py::arg("s"), py::arg("tau"), py::arg("method") = Interp::sinc);
    m.def("husimi_kano", &husimi_kano, py::arg("f"), py::arg("t_axis"), py::arg("omega_axis"));
    m.def("coherent_state_overlap", &coherent_state_overlap, py::arg("f"), py::arg("t"),
          py::arg("omega"));

    py::class_<RayParams>(m, "RayParams")
        .def(py::init<double, double>(), py::arg("mu"), py::arg("nu"))
        .def_readwrite("mu", &RayParams::mu)
        .def_readwrite("nu", &RayParams::nu);

    py::enum_<TomogramFamily>(m, "TomogramFamily")
        .value("symplectic", TomogramFamily::symplectic)
        .value("time_scale", TomogramFamily::time_scale)
        .value("freq_scale", TomogramFamily::freq_scale)
        .value("photon_number", TomogramFamily::photon_number);

    py::class_<TomogramField>(m, "TomogramField")
        .def_readonly("x_axis", &TomogramField::x_axis)
        .def_readonly("rays", &TomogramField::rays)
        .def_readonly("family", &TomogramField::family)
        .def_readonly("warnings", &TomogramField::warnings)
        .def_property_readonly("values", [](const TomogramField& f) {
            return to_numpy_2d_real(f.values, f.rays.size(), f.nx());
        });

    m.def("symplectic_tomogram", &symplectic_tomogram, py::arg("f"), py::arg("ray"),
          py::arg("x_axis"), py::arg("method") = Interp::sinc);
    m.def("tomogram_family", &tomogram_family, py::arg("f"), py::arg("thetas"),
          py::arg("x_axis"), py::arg("method") = Interp::sinc);
    m.def("symplectic_inversion_data", &symplectic_inversion_data, py::arg("f"),
          py::arg("t_axis"), py::arg("mu_axis"), py::arg("x_axis"));
    m.def("invert_symplectic", &invert_symplectic, py::arg("data"));
    m.def("tomogram_from_wigner", &tomogram_from_wigner, py::arg("wv"), py::arg("ray"),
          py::arg("x_axis"));
    m.def("quasidist_from_tomogram",
          [](const TomogramField& f, std::size_t row) {
              std::vector<std::string> warnings;
              const cd v = quasidist_from_tomogram(f, row, &warnings);
              return py::make_tuple(v, warnings);
          },
          py::arg("field"), py::arg("row") = 0);
    m.def("symplectic_eigenfunction", &symplectic_eigenfunction, py::arg("ray"), py::arg("X"),
          py::arg("axis"));

    py::class_<MellinGrid>(m, "MellinGrid")
        .def(py::init<>())
        .def(py::init([](double x_min, double x_max, std::size_t count) {
                 return MellinGrid{x_min, x_max, count};
             }),
             py::arg("x_min"), py::arg("x_max"), py::arg("count"))
        .def_readwrite("x_min", &MellinGrid::x_min)
        .def_readwrite("x_max", &MellinGrid::x_max)
        .def_readwrite("count", &MellinGrid::count);

    py::class_<AffineParams>(m, "AffineParams")
        .def(py::init([](double mu, double nu, const Axis& s_axis) {
                 return AffineParams{mu, nu, s_axis};
             }),
             py::arg("mu"), py::arg("nu"), py::arg("s_axis"))
        .def_readwrite("mu", &AffineParams::mu)
        .def_readwrite("nu", &AffineParams::nu)
        .def_readwrite("s_axis", &AffineParams::s_axis);

    m.def("freq_scale_tomogram", &freq_scale_tomogram, py::arg("f"), py::arg("params"),
          py::arg("grid") = MellinGrid{});
    m.def("time_scale_tomogram", &time_scale_tomogram, py::arg("f"), py::arg("params"),
          py::arg("grid") = MellinGrid{});
    m.def("time_scale_inversion_data", &time_scale_inversion_data, py::arg("f"),
          py::arg("mu_axis"), py::arg("s_axis"), py::arg("grid") = MellinGrid{});
    m.def("invert_time_scale", &invert_time_scale, py::arg("data"), py::arg("out_axis"));
    m.def("affine_param_map", &affine_param_map, py::arg("s"), py::arg("tau"));
    m.def("affine_param_map_inverse", &affine_param_map_inverse, py::arg("mu"), py::arg("nu"));

    py::enum_<FourierConvention>(m, "FourierConvention")
        .value("no_prefactor", FourierConvention::no_prefactor)
        .value("unitary", FourierConvention::unitary);

    py::class_<ScaleGrid>(m, "ScaleGrid")
        .def(py::init([](double s_min, double s_max, std::size_t count) {
                 return ScaleGrid{s_min, s_max, count};
             }),
             py::arg("s_min"), py::arg("s_max"), py::arg("count"))
        .def_readwrite("s_min", &ScaleGrid::s_min)
        .def_readwrite("s_max", &ScaleGrid::s_max)
        .def_readwrite("count", &ScaleGrid::count);

    py::class_<WaveletField>(m, "WaveletField")
        .def_readonly("s_axis", &WaveletField::s_axis)
        .def_readonly("log_spaced", &WaveletField::log_spaced)
        .def_readonly("tau_axis", &WaveletField::tau_axis)
        .def_readonly("warnings", &WaveletField::warnings)
        .def("scales",
             [](const WaveletField& f) {
                 py::array_t<double> out(static_cast<py::ssize_t>(f.n_scales()));
                 for (std::size_t i = 0; i < f.n_scales(); ++i)
                     out.mutable_data()[i] = f.scale(i);
                 return out;
             })
        .def_property_readonly("values", [](const WaveletField& f) {
            return to_numpy_2d(f.values, f.n_scales(), f.n_tau());
        });

    m.def("cwt", &cwt, py::arg("f"), py::arg("h"), py::arg("scales"), py::arg("tau_axis"));
    m.def("cwt_value", &cwt_value, py::arg("f"), py::arg("h"), py::arg("s"), py::arg("tau"));
    m.def("cwt_alt_form", &cwt_alt_form, py::arg("f"), py::arg("h"), py::arg("s"),
          py::arg("tau"));
    m.def("icwt", &icwt, py::arg("w_field"), py::arg("h"), py::arg("out_axis"));
    m.def("admissibility_constant", &admissibility_constant, py::arg("h"),
          py::arg("convention") = FourierConvention::no_prefactor);
    m.def("reconstruction_constant", &reconstruction_constant, py::arg("h"));
    m.def("wavelet_energy", &wavelet_energy, py::arg("w_field"));

    py::class_<PolarizationQuad>(m, "PolarizationQuad")
        .def_readonly("f1", &PolarizationQuad::f1)
        .def_readonly("f2", &PolarizationQuad::f2)
        .def_readonly("f3", &PolarizationQuad::f3)
        .def_readonly("f4", &PolarizationQuad::f4);

    py::class_<PhotonTomogram>(m, "PhotonTomogram")
        .def_readonly("beta", &PhotonTomogram::beta)
        .def_property_readonly("probs", [](const PhotonTomogram& p) {
            py::array_t<double> out(static_cast<py::ssize_t>(p.probs.size()));
            std::copy(p.probs.begin(), p.probs.end(), out.mutable_data());
            return out;
        });

    m.def("make_polarization_quad", &make_polarization_quad, py::arg("h"), py::arg("f"));
    m.def("wavelet_from_tomograms",
          [](const SampledSignal& h, const SampledSignal& f, TomogramFamily family, double mu,
             double nu, const Axis& x_axis) {
              std::vector<std::string> warnings;
              const cd v = wavelet_from_tomograms(h, f, family, mu, nu, x_axis, &warnings);
              return py::make_tuple(v, warnings);
          },
          py::arg("h"), py::arg("f"), py::arg("family"), py::arg("mu"), py::arg("nu"),
          py::arg("x_axis"));
    m.def("generator_matrix_element", &generator_matrix_element, py::arg("h"), py::arg("f"),
          py::arg("family"), py::arg("mu"), py::arg("nu"));
    m.def("tomogram_from_characteristic", &tomogram_from_characteristic, py::arg("q_eval"), py::arg("x_axis"),
          py::arg("k_max") = 16.0, py::arg("decay_floor") = 1e-8, py::arg("k_step") = 0.0);
    m.def("quasidist_from_rescaled_tomogram", &quasidist_from_rescaled_tomogram, py::arg("field"), py::arg("p"),
          py::arg("row") = 0);
    m.def("photon_number_tomogram", &photon_number_tomogram, py::arg("f"), py::arg("beta"),
          py::arg("n_max"));

    py::enum_<FileFormat>(m, "FileFormat")
        .value("csv", FileFormat::csv)
        .value("field_binary", FileFormat::field_binary);

    m.def("load_signal", &load_signal, py::arg("path"), py::arg("format") = FileFormat::csv);
    m.def("store_signal", &store_signal, py::arg("f"), py::arg("path"),
          py::arg("format") = FileFormat::csv);
    m.def("store_tomogram",
          [](const TomogramField& f, const std::string& p, FileFormat fmt) {
              store_field(f, p, fmt);
          },
          py::arg("field"), py::arg("path"), py::arg("format") = FileFormat::field_binary);
    m.def("store_phase_plane",
          [](const PhasePlaneField& f, const std::string& p, FileFormat fmt) {
              store_field(f, p, fmt);
          },
          py::arg("field"), py::arg("path"), py::arg("format") = FileFormat::field_binary);
    m.def("store_wavelet_field",
          [](const WaveletField& f, const std::string& p, FileFormat fmt) {
              store_field(f, p, fmt);
          },
          py::arg("field"), py::arg("path"), py::arg("format") = FileFormat::field_binary);
    m.def("load_field",
          [](const std::string& p) -> py::object {
              auto any = load_field(p);
              return std::visit([](auto&& v) -> py::object { return py::cast(v); }, any);
          },
          py::arg("path"));

    py::class_<Config>(m, "Config")
        .def(py::init<>())
        .def_static("from_file", &Config::from_file)
        .def("set", &Config::set)
        .def("get", [](const Config& c, const std::string& k) -> py::object {
            auto v = c.get(k);
            return v ? py::cast(*v) : py::none();
        });

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("residual", &CheckResult::residual)
        .def_readonly("tolerance", &CheckResult::tolerance)
        .def_readonly("passed", &CheckResult::passed);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("checks", &VerificationReport::checks)
        .def_readonly("wall_seconds", &VerificationReport::wall_seconds)
        .def("all_passed", &VerificationReport::all_passed);

    m.def("run_verify", &run_verify, py::arg("config") = Config{},
          py::call_guard<py::gil_scoped_release>());
    m.def("serialize_report", &serialize_report, py::arg("report"),
          py::arg("include_timing") = false);
}
