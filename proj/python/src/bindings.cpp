// Python module bfamily._core: double-precision solver, tracker and oracle.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bfamily/cli/commands.hpp"
#include "bfamily/error.hpp"
#include "bfamily/integrator.hpp"
#include "bfamily/synthetic.hpp"
#include "bfamily/tracker.hpp"

namespace py = pybind11;
using namespace bfamily;

namespace {

using cd = std::complex<double>;
using ComplexArray = py::array_t<cd, py::array::c_style | py::array::forcecast>;
using RealArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

Spectrum<double> spectrum_from_half(const ComplexArray& half) {
    if (half.ndim() != 1 || half.size() < 5) throw py::value_error("half spectrum must be 1-D with K/2+1 >= 5 entries");
    const int modes = 2 * static_cast<int>(half.size() - 1);
    std::vector<cd> v(half.data(), half.data() + half.size());
    return Spectrum<double>::from_half(make_grid(modes), std::move(v), 1e-12);
}

ComplexArray half_array(const Spectrum<double>& s) {
    const auto h = s.half();
    ComplexArray out(static_cast<py::ssize_t>(h.size()));
    std::copy(h.begin(), h.end(), out.mutable_data());
    return out;
}

py::dict fit_dict(const FitResult<double>& f) {
    py::dict d;
    d["C"] = f.C;
    d["alpha"] = f.alpha;
    d["delta"] = f.delta;
    d["x_star"] = f.x_star;
    d["k_min"] = f.k_min;
    d["k_max"] = f.k_max;
    d["residual"] = f.residual;
    d["raw_delta"] = f.raw_delta;
    d["delta_clamped"] = f.delta_clamped;
    d["band_alpha"] = f.band_alpha;
    d["band_delta"] = f.band_delta;
    d["wynn_fallback"] = f.wynn_fallback;
    return d;
}

TrackerOptions tracker_options(int k_min, int regression_samples, double ts_exponent) {
    TrackerOptions o;
    o.k_min = k_min;
    o.regression_samples = regression_samples;
    o.ts_exponent = ts_exponent;
    return o;
}

py::dict simulate_py(double b, int modes, std::optional<double> dt, double t_end, const std::string& initial,
                     bool dealias, int sample_every, bool stop_at_resolution) {
    BFamilyConfig<double> c;
    c.b = b;
    c.grid = make_grid(modes);
    c.initial = InitialCondition<double>{parse_initial_kind(initial), std::nullopt};
    c.dt = dt ? *dt : default_dt(initial_datum(c.initial, c.grid));
    c.t_end = t_end;
    c.dealias = dealias;
    c.sample_every = sample_every;
    if (stop_at_resolution) c.stop_policy.delta_probe = resolution_probe<double>();
    Trajectory<double> tr;
    {
        py::gil_scoped_release release;
        tr = simulate(c);
    }
    const auto n = static_cast<py::ssize_t>(tr.snapshots.size());
    const auto width = static_cast<py::ssize_t>(modes / 2 + 1);
    ComplexArray spectra({n, width});
    for (py::ssize_t i = 0; i < n; ++i) {
        const auto h = tr.snapshots[static_cast<std::size_t>(i)].half();
        std::copy(h.begin(), h.end(), spectra.mutable_data(i, 0));
    }
    py::dict d;
    d["times"] = py::array_t<double>(static_cast<py::ssize_t>(tr.times.size()), tr.times.data());
    d["spectra"] = spectra;
    d["stop_reason"] = std::string(to_string(tr.stop_reason));
    d["steps"] = tr.steps_taken;
    d["dt"] = c.dt;
    return d;
}

py::dict track_py(const RealArray& times, const ComplexArray& spectra, double b, int k_min, int regression_samples,
                  double ts_exponent) {
    if (spectra.ndim() != 2 || times.ndim() != 1 || spectra.shape(0) != times.shape(0)) {
        throw py::value_error("spectra must be (n, K/2+1) with one row per time");
    }
    Trajectory<double> tr;
    tr.config.b = b;
    tr.config.grid = make_grid(2 * static_cast<int>(spectra.shape(1) - 1));
    for (py::ssize_t i = 0; i < times.shape(0); ++i) {
        tr.times.push_back(times.at(i));
        std::vector<cd> h(spectra.data(i, 0), spectra.data(i, 0) + spectra.shape(1));
        tr.snapshots.push_back(Spectrum<double>::from_half(tr.config.grid, std::move(h), 1e-12));
    }
    SingularityTrace<double> trace;
    {
        py::gil_scoped_release release;
        trace = track(tr, tracker_options(k_min, regression_samples, ts_exponent));
    }
    py::list fits;
    for (const auto& f : trace.fits) fits.append(fit_dict(f));
    py::dict d;
    d["times"] = trace.times;
    d["fits"] = fits;
    d["unresolved_times"] = trace.unresolved_times;
    d["reached_resolution"] = trace.reached_resolution;
    d["t_s"] = trace.t_s;
    d["t_s_stderr"] = trace.t_s_stderr;
    d["alpha_at_ts"] = trace.alpha_at_ts;
    d["alpha_at_ts_stderr"] = trace.alpha_at_ts_stderr;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "b-family pseudospectral solver and analyticity-strip tracker (double precision)";

    static py::exception<Error> error(m, "BFamilyError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    m.def("simulate", &simulate_py, py::arg("b"), py::arg("modes") = 256, py::arg("dt") = py::none(),
          py::arg("t_end") = 1.0, py::arg("initial") = "I", py::arg("dealias") = false, py::arg("sample_every") = 100,
          py::arg("stop_at_resolution") = true,
          "Integrate from type I (sin x) or II (1 + sin x) data. Returns times, spectra (n, K/2+1), stop_reason.");
    m.def("track", &track_py, py::arg("times"), py::arg("spectra"), py::arg("b") = 3.0, py::arg("k_min") = 8,
          py::arg("regression_samples") = 5, py::arg("ts_exponent") = 1.5,
          "Fit every snapshot and extrapolate the blow-up time.");
    m.def(
        "fit_spectrum", [](const ComplexArray& half, int k_min) { return fit_dict(fit_spectrum(spectrum_from_half(half), tracker_options(k_min, 5, 1.5))); },
        py::arg("half"), py::arg("k_min") = 8, "Fit C, alpha, delta, x* to one half spectrum (k = 0..K/2).");
    m.def(
        "forward_transform",
        [](const RealArray& values) {
            std::vector<double> v(values.data(), values.data() + values.size());
            const auto grid = make_grid(static_cast<int>(v.size()));
            return half_array(forward_transform(PeriodicField<double>(grid, std::move(v))));
        },
        py::arg("values"), "Samples on x_j = -pi + 2 pi j / K to coefficients k = 0..K/2 (last entry: Nyquist).");
    m.def(
        "inverse_transform",
        [](const ComplexArray& half) {
            const auto f = inverse_transform(spectrum_from_half(half));
            return RealArray(f.size(), f.values().data());
        },
        py::arg("half"));
    m.def(
        "oracle_field",
        [](double alpha, double delta, double x_star, int modes, double amplitude) {
            const auto f = oracle_field(SyntheticSpec<double>{alpha, delta, x_star, amplitude}, make_grid(modes));
            return RealArray(f.size(), f.values().data());
        },
        py::arg("alpha"), py::arg("delta"), py::arg("x_star") = 0.0, py::arg("modes") = 2048, py::arg("amplitude") = 1.0,
        "Synthetic field whose nearest complex singularity has exponent alpha at x* + i delta.");
    m.def(
        "oracle_spectrum",
        [](double alpha, double delta, double x_star, int modes, double amplitude) {
            return half_array(oracle_spectrum(SyntheticSpec<double>{alpha, delta, x_star, amplitude}, make_grid(modes)));
        },
        py::arg("alpha"), py::arg("delta"), py::arg("x_star") = 0.0, py::arg("modes") = 2048, py::arg("amplitude") = 1.0);
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::vector<const char*> argv{"bfamily"};
            for (const auto& a : args) argv.push_back(a.c_str());
            std::ostringstream out, err;
            int rc;
            {
                py::gil_scoped_release release;
                rc = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
            }
            return py::make_tuple(rc, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line interface; returns (exit_code, stdout, stderr).");
}
