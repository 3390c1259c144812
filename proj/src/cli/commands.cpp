#include "bfamily/cli/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "bfamily/error.hpp"
#include "bfamily/parallel.hpp"
#include "bfamily/synthetic.hpp"
#include "bfamily/tracker.hpp"
#include "csv.hpp"
#include "plot_scripts.hpp"

namespace bfamily::cli {

namespace fs = std::filesystem;

namespace {

constexpr double kSimulateInterval = 0.05;
constexpr double kTrackInterval = 0.01;
constexpr double kSimulateTEnd = 1.0;
constexpr double kSweepTEnd = 6.0;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::Overflow: return kExitOverflow;
        case ErrorCode::InsufficientData: return kExitInsufficientData;
        default: return kExitConfig;
    }
}

template <class Real>
std::string fmt(const Real& v) {
    return format_real(v);
}

template <class Real>
PeriodicField<Real> read_custom_field(const std::string& path, const GridSpec& grid) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidConfig, "cannot read initial_file '" + path + "'");
    std::vector<Real> values;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        values.push_back(parse_real<Real>(line));
    }
    if (static_cast<int>(values.size()) != grid.n_modes()) {
        throw Error(ErrorCode::InvalidConfig, "initial_file holds " + std::to_string(values.size()) +
                                                  " samples, modes = " + std::to_string(grid.n_modes()));
    }
    return PeriodicField<Real>(grid, std::move(values));
}

template <class Real>
BFamilyConfig<Real> build_config(const RunManifest& m, double default_t_end, double default_interval) {
    m.validate();
    BFamilyConfig<Real> c;
    c.b = Real(m.b);
    c.grid = make_grid(m.modes);
    const InitialKind kind = parse_initial_kind(m.initial);
    if (kind == InitialKind::Custom) {
        if (m.initial_file.empty()) throw Error(ErrorCode::InvalidConfig, "initial = custom needs initial_file");
        c.initial = InitialCondition<Real>::from_field(read_custom_field<Real>(m.initial_file, c.grid));
    } else {
        c.initial = InitialCondition<Real>{kind, std::nullopt};
    }
    c.dt = m.dt ? parse_real<Real>(*m.dt) : default_dt(initial_datum(c.initial, c.grid));
    c.t_end = m.t_end ? parse_real<Real>(*m.t_end) : Real(default_t_end);
    c.dealias = m.dealias;
    c.sample_every = m.sample_every ? *m.sample_every
                                    : stride_for_interval(Real(m.sample_interval.value_or(default_interval)), c.dt);
    if (m.stop_at_resolution) c.stop_policy.delta_probe = resolution_probe<Real>(m.tracker_options());
    validate(c);
    return c;
}

fs::path prepare_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw Error(ErrorCode::Io, "cannot create output directory '" + dir + "'");
    return fs::path(dir);
}

// Spectrum rows use the wavenumber each stored entry represents: 0..K/2-1 and -K/2.
template <class Real>
void write_spectra(const fs::path& path, const RunManifest& m, const std::string& command, const Trajectory<Real>& tr) {
    CsvWriter csv(path, command, m, {"t", "k", "re", "im"});
    for (std::size_t i = 0; i < tr.snapshots.size(); ++i) {
        const auto half = tr.snapshots[i].half();
        const int h = tr.snapshots[i].grid().nyquist();
        for (int k = 0; k <= h; ++k) {
            const auto& c = half[static_cast<std::size_t>(k)];
            csv.row(fmt(tr.times[i]), k == h ? -h : k, fmt(c.real()), fmt(c.imag()));
        }
    }
}

template <class Real>
void write_fields(const fs::path& path, const RunManifest& m, const Trajectory<Real>& tr) {
    CsvWriter csv(path, "simulate", m, {"t", "x", "u", "u_x"});
    for (std::size_t i = 0; i < tr.snapshots.size(); ++i) {
        const auto u = inverse_transform(tr.snapshots[i]);
        const auto ux = inverse_transform(derivative(tr.snapshots[i], 1));
        for (int j = 0; j < u.size(); ++j) csv.row(fmt(tr.times[i]), fmt(u.grid().template x<Real>(j)), fmt(u[j]), fmt(ux[j]));
    }
}

template <class Real>
int simulate_impl(const RunManifest& m, std::ostream& log) {
    const auto config = build_config<Real>(m, kSimulateTEnd, kSimulateInterval);
    const fs::path dir = prepare_dir(m.output_dir);
    const auto tr = simulate(config);
    write_spectra(dir / "spectra.csv", m, "simulate", tr);
    write_fields(dir / "fields.csv", m, tr);
    {
        CsvWriter csv(dir / "summary.csv", "simulate", m, {"key", "value"});
        csv.row("stop_reason", to_string(tr.stop_reason));
        csv.row("t_final", fmt(tr.times.back()));
        csv.row("steps", tr.steps_taken);
        csv.row("snapshots", tr.snapshots.size());
        csv.row("dt", fmt(config.dt));
        csv.row("sample_every", config.sample_every);
        csv.row("mean", fmt(tr.snapshots.back().half().front().real()));
        if (!tr.detail.empty()) csv.row("detail", '"' + tr.detail + '"');
    }
    write_text(dir / "plot_simulate.py", kPlotSimulate);
    log << "simulate: " << to_string(tr.stop_reason) << " at t=" << fmt(tr.times.back()) << ", "
        << tr.snapshots.size() << " snapshots -> " << dir.string() << '\n';
    return tr.stop_reason == StopReason::Overflow ? kExitOverflow : kExitOk;
}

// Reads a spectra.csv written by simulate, including the manifest it was produced with.
template <class Real>
Trajectory<Real> load_trajectory(const fs::path& dir, RunManifest& manifest_out) {
    const fs::path path = dir / "spectra.csv";
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot read '" + path.string() + "'");
    std::string line, manifest_text;
    bool header_seen = false;
    std::vector<std::array<std::string, 4>> rows;
    while (std::getline(in, line)) {
        if (line.rfind("# manifest ", 0) == 0) {
            manifest_text += line.substr(11) + '\n';
            continue;
        }
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        std::array<std::string, 4> f;
        std::istringstream ls(line);
        for (auto& s : f) std::getline(ls, s, ',');
        rows.push_back(f);
    }
    RunManifest produced = parse_manifest(manifest_text);
    manifest_out.b = produced.b;
    manifest_out.modes = produced.modes;
    manifest_out.dealias = produced.dealias;
    manifest_out.initial = produced.initial;

    Trajectory<Real> tr;
    tr.config.b = Real(produced.b);
    tr.config.grid = make_grid(produced.modes);
    tr.config.dealias = produced.dealias;
    const int h = tr.config.grid.nyquist();
    std::map<std::string, std::size_t> seen;
    std::vector<std::vector<Complex<Real>>> halves;
    for (const auto& f : rows) {
        auto [it, fresh] = seen.emplace(f[0], halves.size());
        if (fresh) {
            tr.times.push_back(parse_real<Real>(f[0]));
            halves.emplace_back(static_cast<std::size_t>(h + 1));
        }
        int k = std::stoi(f[1]);
        if (k == -h) k = h;
        if (k < 0 || k > h) throw Error(ErrorCode::InvalidConfig, "wavenumber out of range in " + path.string());
        halves[it->second][static_cast<std::size_t>(k)] = Complex<Real>(parse_real<Real>(f[2]), parse_real<Real>(f[3]));
    }
    for (auto& half : halves) tr.snapshots.push_back(Spectrum<Real>::from_half(tr.config.grid, std::move(half), Real(1)));
    return tr;
}

template <class Real>
void write_track_outputs(const fs::path& dir, const RunManifest& m, const Trajectory<Real>& tr,
                         const SingularityTrace<Real>& trace) {
    {
        CsvWriter csv(dir / "spectra_magnitude.csv", "track", m, {"t", "k", "abs"});
        for (std::size_t i = 0; i < tr.snapshots.size(); ++i) {
            const auto half = tr.snapshots[i].half();
            for (std::size_t k = 0; k + 1 < half.size(); ++k) csv.row(fmt(tr.times[i]), k, fmt(Real(abs(half[k]))));
        }
    }
    {
        CsvWriter csv(dir / "trace.csv", "track", m,
                      {"t", "delta", "alpha", "x_star", "residual", "C", "band_alpha", "band_delta", "k_min", "k_max",
                       "raw_delta", "delta_clamped", "wynn_fallback"});
        for (std::size_t i = 0; i < trace.fits.size(); ++i) {
            const auto& f = trace.fits[i];
            csv.row(fmt(trace.times[i]), fmt(f.delta), fmt(f.alpha), fmt(f.x_star), fmt(f.residual), fmt(f.C),
                    fmt(f.band_alpha), fmt(f.band_delta), f.k_min, f.k_max, fmt(f.raw_delta), int(f.delta_clamped),
                    int(f.wynn_fallback));
        }
    }
    {
        CsvWriter csv(dir / "singularity.csv", "track", m, {"key", "value"});
        csv.row("t_s", trace.t_s ? fmt(*trace.t_s) : std::string("none"));
        csv.row("t_s_stderr", trace.t_s ? fmt(trace.t_s_stderr) : std::string("none"));
        csv.row("alpha_at_ts", trace.alpha_at_ts ? fmt(*trace.alpha_at_ts) : std::string("none"));
        csv.row("alpha_at_ts_stderr", trace.alpha_at_ts ? fmt(trace.alpha_at_ts_stderr) : std::string("none"));
        csv.row("alpha_last", trace.fits.empty() ? std::string("none") : fmt(trace.fits.back().alpha));
        csv.row("delta_last", trace.fits.empty() ? std::string("none") : fmt(trace.fits.back().delta));
        csv.row("reached_resolution", int(trace.reached_resolution));
        csv.row("fitted_snapshots", trace.fits.size());
        csv.row("unresolved_snapshots", trace.unresolved_times.size());
        csv.row("stop_reason", to_string(tr.stop_reason));
    }
    write_text(dir / "plot_track.py", kPlotTrack);
}

template <class Real>
int track_impl(const RunManifest& m_in, const std::optional<std::string>& from, std::ostream& log) {
    RunManifest m = m_in;
    m.validate();
    Trajectory<Real> tr;
    if (from) {
        tr = load_trajectory<Real>(fs::path(*from), m);
    } else {
        tr = simulate(build_config<Real>(m, kSimulateTEnd, kTrackInterval));
    }
    const fs::path dir = prepare_dir(m.output_dir);
    const auto trace = track(tr, m.tracker_options());
    write_track_outputs(dir, m, tr, trace);
    log << "track: " << trace.fits.size() << " fitted snapshots";
    if (trace.t_s) {
        log << ", t_s = " << trace.t_s.value() << " +- " << trace.t_s_stderr << ", alpha(t_s) = " << *trace.alpha_at_ts;
    } else {
        log << ", no finite t_s";
    }
    log << " -> " << dir.string() << '\n';
    return kExitOk;
}

struct SweepRow {
    double b = 0;
    std::string initial;
    std::optional<double> t_s;
    double t_s_stderr = 0;
    std::optional<double> alpha_at_ts;
    double alpha_stderr = 0;
    std::optional<double> alpha_last;
    std::optional<double> delta_last;
    std::string stop_reason;
    std::string status;
};

std::string run_label(double b, const std::string& initial) {
    std::ostringstream s;
    s << "b" << format_real(b) << "_" << initial;
    return s.str();
}

template <class Real>
SweepRow sweep_one(const RunManifest& base, double b, const std::string& initial, const fs::path& root) {
    RunManifest m = base;
    m.b = b;
    m.initial = initial;
    m.threads = 1;
    m.output_dir = (root / run_label(b, initial)).string();
    SweepRow row;
    row.b = b;
    row.initial = initial;
    const auto tr = simulate(build_config<Real>(m, kSweepTEnd, kTrackInterval));
    row.stop_reason = std::string(to_string(tr.stop_reason));
    const auto trace = track(tr, m.tracker_options());
    write_track_outputs(prepare_dir(m.output_dir), m, tr, trace);
    row.t_s = trace.t_s;
    row.t_s_stderr = trace.t_s_stderr;
    row.alpha_at_ts = trace.alpha_at_ts;
    row.alpha_stderr = trace.alpha_at_ts_stderr;
    if (!trace.fits.empty()) {
        row.alpha_last = to_double(trace.fits.back().alpha);
        row.delta_last = to_double(trace.fits.back().delta);
    }
    const bool finite = (!row.t_s || std::isfinite(*row.t_s)) && (!row.alpha_at_ts || std::isfinite(*row.alpha_at_ts));
    row.status = !finite ? "nonfinite" : (row.t_s ? "ok" : "no_finite_t_s");
    return row;
}

template <class Real>
int sweep_impl(const RunManifest& m, std::ostream& log) {
    m.validate();
    if (m.b_list.empty()) throw Error(ErrorCode::InvalidConfig, "sweep needs b_list");
    for (double b : m.b_list) {
        if (b < -1) {
            throw Error(ErrorCode::InvalidConfig,
                        "b = " + format_real(b) + " < -1 is outside the supported range (b >= -1)");
        }
        if (b == -1 && !m.allow_b_minus_one) {
            throw Error(ErrorCode::InvalidConfig, "b = -1 has no finite blow-up; pass allow_b_minus_one to include it");
        }
    }
    const std::vector<std::string> initials = m.initials.empty() ? std::vector<std::string>{m.initial} : m.initials;
    for (const auto& i : initials) {
        if (parse_initial_kind(i) == InitialKind::Custom && m.initial_file.empty()) {
            throw Error(ErrorCode::InvalidConfig, "initial = custom needs initial_file");
        }
    }
    const fs::path root = prepare_dir(m.output_dir);

    std::vector<std::pair<double, std::string>> jobs;
    for (const auto& i : initials) {
        for (double b : m.b_list) jobs.emplace_back(b, i);
    }
    std::vector<SweepRow> rows(jobs.size());
    std::vector<std::string> failures(jobs.size());
    parallel_for(
        jobs.size(),
        [&](std::size_t j) {
            try {
                rows[j] = sweep_one<Real>(m, jobs[j].first, jobs[j].second, root);
            } catch (const std::exception& e) {
                rows[j].b = jobs[j].first;
                rows[j].initial = jobs[j].second;
                rows[j].status = "error";
                failures[j] = e.what();
            }
        },
        m.threads);

    auto opt = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string("none"); };
    CsvWriter csv(root / "sweep.csv", "sweep", m,
                  {"b", "initial", "t_s", "t_s_stderr", "alpha_at_ts", "alpha_at_ts_stderr", "alpha_last", "delta_last",
                   "stop_reason", "status"});
    int exit = kExitOk;
    for (std::size_t j = 0; j < rows.size(); ++j) {
        const auto& r = rows[j];
        csv.row(format_real(r.b), r.initial, opt(r.t_s), r.t_s ? format_real(r.t_s_stderr) : "none", opt(r.alpha_at_ts),
                r.alpha_at_ts ? format_real(r.alpha_stderr) : "none", opt(r.alpha_last), opt(r.delta_last),
                r.stop_reason.empty() ? "none" : r.stop_reason, r.status);
        log << "sweep: b=" << r.b << " type " << r.initial << ": " << r.status;
        if (r.t_s) log << ", t_s=" << *r.t_s << ", alpha(t_s)=" << *r.alpha_at_ts;
        if (!failures[j].empty()) {
            log << " (" << failures[j] << ")";
            exit = kExitFailure;
        }
        log << '\n';
    }
    write_text(root / "plot_sweep.py", kPlotSweep);
    return exit;
}

template <class F>
int guarded(F&& body, std::ostream& log) {
    try {
        return body();
    } catch (const Error& e) {
        log << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}

}  // namespace

int cmd_simulate(const RunManifest& manifest, std::ostream& log) {
    return guarded(
        [&] {
            return manifest.precision == "extended" ? simulate_impl<Quad>(manifest, log)
                                                    : simulate_impl<double>(manifest, log);
        },
        log);
}

int cmd_track(const RunManifest& manifest, const std::optional<std::string>& trajectory_dir, std::ostream& log) {
    return guarded(
        [&] {
            return manifest.precision == "extended" ? track_impl<Quad>(manifest, trajectory_dir, log)
                                                    : track_impl<double>(manifest, trajectory_dir, log);
        },
        log);
}

int cmd_sweep(const RunManifest& manifest, std::ostream& log) {
    return guarded(
        [&] {
            return manifest.precision == "extended" ? sweep_impl<Quad>(manifest, log) : sweep_impl<double>(manifest, log);
        },
        log);
}

int cmd_validate(const ValidateOptions& options, std::ostream& log) {
    return guarded(
        [&]() -> int {
            const GridSpec grid = make_grid(options.modes);
            const double resolution = 2 * std::numbers::pi / options.modes;
            struct Case {
                double alpha, delta, x_star;
            };
            std::vector<Case> cases;
            for (double a : {1.0 / 3, 2.0 / 5, 1.0 / 2, 3.0 / 5, 2.0 / 3}) {
                for (double d : {0.05, 0.1, 0.2, 0.3, 0.5}) {
                    for (double x : {0.0, 1.0, -std::numbers::pi / 2}) cases.push_back({a, d, x});
                }
            }
            cases.push_back({1.0 / 3, resolution / 2, 0.0});

            struct Outcome {
                double alpha = NAN, delta = NAN, x_star = NAN;
                std::string status, note;
            };
            std::vector<Outcome> out(cases.size());
            parallel_for(
                cases.size(),
                [&](std::size_t i) {
                    const auto& c = cases[i];
                    auto& o = out[i];
                    if (c.delta < resolution) {
                        o.status = "SKIP";
                        o.note = "delta below grid resolution 2pi/K";
                        return;
                    }
                    const auto spec = forward_transform(oracle_field(SyntheticSpec<double>{c.alpha, c.delta, c.x_star, 1.0}, grid));
                    const auto fit = fit_spectrum(spec);
                    o.alpha = options.mutate_exponent ? fit.alpha + 1 : fit.alpha;
                    o.delta = fit.delta;
                    o.x_star = fit.x_star;
                    const double ea = std::abs(o.alpha - c.alpha);
                    const double ed = std::abs(o.delta - c.delta);
                    const double ex = std::abs(o.x_star - c.x_star);
                    const bool ok = ea < 0.02 && ed < 1e-4 && ex < 1e-4;
                    o.status = ok ? "PASS" : "FAIL";
                    if (!ok) {
                        std::ostringstream note;
                        if (std::abs(ea - 1) < 0.05) note << "alpha off by ~1: decay exponent reported as s instead of s-1; ";
                        if (ea >= 0.02) note << "|d alpha|=" << ea << "; ";
                        if (ed >= 1e-4) note << "|d delta|=" << ed << "; ";
                        if (ex >= 1e-4) note << "|d x*|=" << ex << "; ";
                        o.note = note.str();
                    }
                },
                options.threads);

            std::unique_ptr<CsvWriter> csv;
            if (options.output_dir) {
                RunManifest m;
                m.modes = options.modes;
                m.output_dir = *options.output_dir;
                csv = std::make_unique<CsvWriter>(prepare_dir(*options.output_dir) / "validate.csv", "validate", m,
                                                  std::vector<std::string>{"alpha", "delta", "x_star", "fit_alpha",
                                                                           "fit_delta", "fit_x_star", "status"});
            }
            int passed = 0, failed = 0, skipped = 0;
            char line[256];
            std::snprintf(line, sizeof line, "%-8s %-8s %-9s | %-9s %-10s %-10s | %s\n", "alpha", "delta", "x*",
                          "fit alpha", "fit delta", "fit x*", "status");
            log << line;
            for (std::size_t i = 0; i < cases.size(); ++i) {
                const auto& c = cases[i];
                const auto& o = out[i];
                std::snprintf(line, sizeof line, "%-8.4f %-8.5f %-9.5f | %-9.5f %-10.7f %-10.7f | %s", c.alpha, c.delta,
                              c.x_star, o.alpha, o.delta, o.x_star, o.status.c_str());
                log << line << (o.note.empty() ? "" : "  " + o.note) << '\n';
                if (csv) {
                    csv->row(format_real(c.alpha), format_real(c.delta), format_real(c.x_star), format_real(o.alpha),
                             format_real(o.delta), format_real(o.x_star), o.status);
                }
                if (o.status == "PASS") ++passed;
                else if (o.status == "FAIL") ++failed;
                else ++skipped;
            }
            log << "validate: " << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
            return failed == 0 ? kExitOk : kExitFailure;
        },
        log);
}

namespace {

bool is_bool_key(const std::string& key) {
    return key == "dealias" || key == "stop_at_resolution" || key == "allow_b_minus_one";
}

std::string flag_name(std::string key) {
    for (auto& c : key) {
        if (c == '_') c = '-';
    }
    return key;
}

// Manifest keys as flags on one subcommand. Values are held as text and applied on top of the
// manifest file, so flags always win.
struct ManifestFlags {
    std::string manifest_path;
    std::map<std::string, std::string> text;
    std::map<std::string, bool> flags;
    std::map<std::string, CLI::Option*> options;

    void attach(CLI::App* app) {
        app->add_option("--manifest", manifest_path, "key=value run manifest; flags override it");
        for (const auto& key : manifest_keys()) {
            const std::string name = flag_name(key);
            if (is_bool_key(key)) {
                flags[key] = false;
                options[key] = app->add_flag("--" + name + ",!--no-" + name, flags[key]);
            } else {
                options[key] = app->add_option("--" + name, text[key]);
            }
        }
    }

    RunManifest resolve() const {
        RunManifest m = manifest_path.empty() ? RunManifest{} : load_manifest(manifest_path);
        for (const auto& [key, opt] : options) {
            if (opt->count() == 0) continue;
            if (is_bool_key(key)) m.set(key, flags.at(key) ? "true" : "false");
            else m.set(key, text.at(key));
        }
        return m;
    }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app("Pseudospectral solver and complex-singularity tracker for the b-family of peakon equations",
                 "bfamily");
    app.require_subcommand(1);

    ManifestFlags simulate_flags, track_flags, sweep_flags;
    auto* simulate_cmd = app.add_subcommand("simulate", "integrate one run and write spectra and fields");
    simulate_flags.attach(simulate_cmd);
    auto* track_cmd = app.add_subcommand("track", "fit the analyticity strip along a run");
    track_flags.attach(track_cmd);
    std::string from;
    track_cmd->add_option("--from", from, "directory holding spectra.csv from a previous simulate");
    auto* sweep_cmd = app.add_subcommand("sweep", "simulate and track over a list of b values");
    sweep_flags.attach(sweep_cmd);

    ValidateOptions vopts;
    std::string vout;
    auto* validate_cmd = app.add_subcommand("validate", "check the tracker against synthetic spectra");
    validate_cmd->add_option("--modes", vopts.modes, "grid size K");
    validate_cmd->add_flag("--mutate-exponent", vopts.mutate_exponent, "report s instead of s-1");
    validate_cmd->add_option("--output-dir", vout, "also write validate.csv here");
    validate_cmd->add_option("--threads", vopts.threads, "worker threads (0: hardware)");

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        if (e.get_exit_code() == 0) return kExitOk;
        err << "run with --help for usage\n";
        return kExitConfig;
    }

    try {
        if (simulate_cmd->parsed()) return cmd_simulate(simulate_flags.resolve(), err);
        if (track_cmd->parsed()) {
            return cmd_track(track_flags.resolve(), from.empty() ? std::nullopt : std::optional<std::string>(from), err);
        }
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_flags.resolve(), err);
        if (!vout.empty()) vopts.output_dir = vout;
        return cmd_validate(vopts, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}

}  // namespace bfamily::cli
