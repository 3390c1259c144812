#include "bfamily/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "bfamily/error.hpp"
#include "bfamily/parallel.hpp"

namespace bfamily {

namespace {

template <class Real>
Real magnitude(const Spectrum<Real>& spec, int k) {
    using std::abs;
    return abs(spec.half()[static_cast<std::size_t>(k)]);
}

template <class Real>
Real noise_floor(const Spectrum<Real>& spec, double factor) {
    return Real(factor) * epsilon<Real>() * spec.max_abs();
}

struct Line {
    double intercept = 0;
    double slope = 0;
    double var_intercept = 0;
    double var_slope = 0;
    double cov = 0;
    double sigma2 = 0;  // residual variance
    double x_mean = 0;
    double sxx = 0;
    std::size_t n = 0;
};

// Ordinary least squares y = a + b x with the usual parameter covariance.
Line fit_line(std::span<const double> x, std::span<const double> y) {
    Line l;
    l.n = x.size();
    const double n = static_cast<double>(l.n);
    double ym = 0;
    for (std::size_t i = 0; i < l.n; ++i) {
        l.x_mean += x[i];
        ym += y[i];
    }
    l.x_mean /= n;
    ym /= n;
    double sxy = 0;
    for (std::size_t i = 0; i < l.n; ++i) {
        l.sxx += (x[i] - l.x_mean) * (x[i] - l.x_mean);
        sxy += (x[i] - l.x_mean) * (y[i] - ym);
    }
    l.slope = sxy / l.sxx;
    l.intercept = ym - l.slope * l.x_mean;
    double rss = 0;
    for (std::size_t i = 0; i < l.n; ++i) {
        const double r = y[i] - l.intercept - l.slope * x[i];
        rss += r * r;
    }
    l.sigma2 = l.n > 2 ? rss / (n - 2) : 0.0;
    l.var_slope = l.sigma2 / l.sxx;
    l.var_intercept = l.sigma2 * (1.0 / n + l.x_mean * l.x_mean / l.sxx);
    l.cov = -l.x_mean * l.var_slope;
    return l;
}

// Epsilon-table limit, replaced by the last term when it lands implausibly far outside the
// sampled values; pre-asymptotic sequences can send the table anywhere.
template <class Real>
Real guarded_limit(const std::vector<Real>& seq, int& depth, bool& fallback) {
    const auto w = wynn_epsilon<Real>(seq);
    const auto [lo_it, hi_it] = std::minmax_element(seq.begin(), seq.end());
    const Real span = *hi_it - *lo_it;
    depth = w.depth;
    if (!is_finite(w.limit) || w.limit < *lo_it - span || w.limit > *hi_it + span) {
        fallback = true;
        depth = 0;
        return seq.back();
    }
    return w.limit;
}

}  // namespace

template <class Real>
LocalFit<Real> local_fit(const Spectrum<Real>& spec, int k, double noise_factor) {
    using std::log;
    using std::log1p;
    const int h = spec.grid().nyquist();
    if (k < 2 || k > h - 2) {
        throw Error(ErrorCode::NoiseFloor, "k = " + std::to_string(k) + " outside [2, K/2-2]");
    }
    const Real floor = noise_floor(spec, noise_factor);
    const Real am = magnitude(spec, k - 1);
    const Real a0 = magnitude(spec, k);
    const Real ap = magnitude(spec, k + 1);
    if (!(am > floor && a0 > floor && ap > floor)) {
        throw Error(ErrorCode::NoiseFloor, "modes around k = " + std::to_string(k) + " are below the noise floor");
    }
    const Real kk(k);
    // log(k^2 / ((k-1)(k+1))) = log1p(1/(k^2-1)), kept accurate for large k.
    const Real s = log((am / a0) * (ap / a0)) / log1p(Real(1) / (kk * kk - 1));
    const Real delta = log(a0 / ap) - s * log1p(Real(1) / kk);
    const Real log_c = log(a0) + s * log(kk) + kk * delta;
    return {s, delta, log_c};
}

template <class Real>
SlidingFit<Real> sliding_fit(const Spectrum<Real>& spec, int k_min, int k_max, double noise_factor) {
    SlidingFit<Real> out;
    const int h = spec.grid().nyquist();
    for (int k = std::max(2, k_min); k <= std::min(k_max, h - 2); ++k) {
        try {
            const auto f = local_fit(spec, k, noise_factor);
            out.k.push_back(k);
            out.s.push_back(f.s);
            out.delta.push_back(f.delta);
            out.log_c.push_back(f.log_c);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NoiseFloor) throw;
        }
    }
    if (out.k.empty()) {
        throw Error(ErrorCode::EmptyWindow,
                    "no admissible k in [" + std::to_string(k_min) + ", " + std::to_string(k_max) + "]");
    }
    return out;
}

template <class Real>
WynnResult<Real> wynn_epsilon(std::span<const Real> seq, double singular_tol) {
    using std::abs;
    if (seq.size() < 3) throw Error(ErrorCode::InsufficientData, "epsilon algorithm needs at least 3 terms");
    const Real tol(singular_tol);
    std::vector<Real> prev(seq.size() + 1, Real(0));
    std::vector<Real> cur(seq.begin(), seq.end());
    WynnResult<Real> result{cur.back(), 0, false};

    int column = 0;
    while (cur.size() > 1) {
        std::vector<Real> next(cur.size() - 1);
        std::size_t negligible = 0;
        bool singular = false;
        for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
            const Real d = cur[j + 1] - cur[j];
            const Real scale = std::max(abs(cur[j]), abs(cur[j + 1]));
            if (abs(d) <= tol * scale) {
                singular = true;
                ++negligible;
                continue;
            }
            next[j] = prev[j + 1] + Real(1) / d;
        }
        if (singular) {
            if (column == 0 && negligible == cur.size() - 1) result.degenerate = true;
            break;
        }
        prev = std::move(cur);
        cur = std::move(next);
        ++column;
        if (column % 2 == 0) {
            result.limit = cur.back();
            result.depth = column;
        }
    }
    return result;
}

std::vector<int> geometric_ladder(int k_min, int k_max, int max_length) {
    std::vector<int> best;
    for (const auto& [p, q] : {std::pair{2, 1}, std::pair{3, 2}}) {
        for (int n = max_length; n >= 3; --n) {
            long top_unit = 1, bottom_unit = 1;
            for (int i = 0; i < n - 1; ++i) {
                top_unit *= p;
                bottom_unit *= q;
            }
            const long c = k_max / top_unit;
            if (c < 1 || c * bottom_unit < k_min) continue;
            std::vector<int> ks(static_cast<std::size_t>(n));
            long pj = 1;
            for (int j = 0; j < n; ++j) {
                long qj = 1;
                for (int i = 0; i < n - 1 - j; ++i) qj *= q;
                ks[static_cast<std::size_t>(j)] = static_cast<int>(c * qj * pj);
                pj *= p;
            }
            if (ks.size() > best.size() || (ks.size() == best.size() && ks.back() > best.back())) best = ks;
            break;
        }
    }
    return best;
}

template <class Real>
FitWindow select_window(const Spectrum<Real>& spec, const TrackerOptions& options) {
    const int h = spec.grid().nyquist();
    const Real floor = noise_floor(spec, options.noise_factor);
    int ceiling = h;
    for (int k = 2; k <= h; ++k) {
        const Real limit = options.k2_noise_ceiling ? floor * Real(k) * Real(k) : floor;
        if (!(magnitude(spec, k) > limit)) {
            ceiling = k;
            break;
        }
    }
    int k_max = std::min({ceiling - 2, h - 2, spec.n_modes() / std::max(1, options.aliasing_divisor)});
    if (options.k_max > 0) k_max = std::min(k_max, options.k_max);
    const int k_min = std::min(options.k_min, std::max(2, k_max / 4));
    if (k_max - k_min < 2) {
        throw Error(ErrorCode::EmptyWindow, "spectrum resolves fewer than 3 modes above the noise floor");
    }
    return {k_min, k_max};
}

template <class Real>
Real estimate_x_star(const Spectrum<Real>& spec, int k_min, int k_max) {
    using std::arg;
    using std::round;
    using std::floor;
    const int h = spec.grid().nyquist();
    k_min = std::max(1, k_min);
    k_max = std::min(k_max, h - 1);
    if (k_max - k_min < 1) throw Error(ErrorCode::EmptyWindow, "phase fit needs at least 2 modes");
    const Real two_pi = 2 * pi<Real>();
    std::vector<Real> phase;
    for (int k = k_min; k <= k_max; ++k) {
        Real p = arg(spec.half()[static_cast<std::size_t>(k)]);
        if (!phase.empty()) p += two_pi * Real(round((phase.back() - p) / two_pi));
        phase.push_back(p);
    }
    const Real n(phase.size());
    Real km(0), pm(0);
    for (std::size_t i = 0; i < phase.size(); ++i) {
        km += Real(k_min + static_cast<int>(i));
        pm += phase[i];
    }
    km /= n;
    pm /= n;
    Real sxy(0), sxx(0);
    for (std::size_t i = 0; i < phase.size(); ++i) {
        const Real dk = Real(k_min + static_cast<int>(i)) - km;
        sxy += dk * (phase[i] - pm);
        sxx += dk * dk;
    }
    const Real x = -sxy / sxx + pi<Real>();
    return x - two_pi * Real(floor(x / two_pi)) - pi<Real>();
}

template <class Real>
FitResult<Real> fit_spectrum(const Spectrum<Real>& spec, const TrackerOptions& options) {
    using std::exp;
    using std::log;
    const FitWindow w = select_window(spec, options);

    std::vector<int> ks = geometric_ladder(w.k_min, w.k_max, options.max_ladder);
    if (ks.empty()) {
        for (int k = std::max(2, w.k_max - options.max_ladder + 1); k <= w.k_max; ++k) ks.push_back(k);
    }
    std::vector<Real> s, d, c;
    for (int k : ks) {
        const auto f = local_fit(spec, k, options.noise_factor);
        s.push_back(f.s);
        d.push_back(f.delta);
        c.push_back(f.log_c);
    }

    FitResult<Real> r;
    int depth_d = 0, depth_c = 0;
    const Real s_lim = guarded_limit(s, r.wynn_depth, r.wynn_fallback);
    r.raw_delta = guarded_limit(d, depth_d, r.wynn_fallback);
    const Real log_c = guarded_limit(c, depth_c, r.wynn_fallback);
    r.alpha = s_lim - 1;
    r.delta_clamped = r.raw_delta < 0;
    r.delta = r.delta_clamped ? Real(0) : r.raw_delta;
    r.C = exp(log_c);
    r.x_star = estimate_x_star(spec, w.k_min, w.k_max);
    r.k_min = w.k_min;
    r.k_max = w.k_max;
    r.ladder = ks;
    for (const auto& v : s) r.ladder_alpha.push_back(v - 1);

    const int m = w.k_max - w.k_min + 1;
    Eigen::MatrixXd design(m, 3);
    Eigen::VectorXd target(m);
    Real misfit(0);
    for (int i = 0; i < m; ++i) {
        const int k = w.k_min + i;
        const Real la = log(magnitude(spec, k));
        design(i, 0) = 1.0;
        design(i, 1) = -std::log(static_cast<double>(k));
        design(i, 2) = -static_cast<double>(k);
        target(i) = to_double(la);
        const Real e = la - (log_c - s_lim * log(Real(k)) - r.raw_delta * Real(k));
        misfit += e * e;
    }
    using std::sqrt;
    r.residual = sqrt(misfit / Real(m));
    const Eigen::Vector3d coef = design.colPivHouseholderQr().solve(target);
    r.band_alpha = coef(1) - 1.0;
    r.band_delta = coef(2);
    return r;
}

template <class Real>
SingularityTrace<Real> track(const Trajectory<Real>& traj, const TrackerOptions& options) {
    const std::size_t n = traj.snapshots.size();
    if (n < 2) throw Error(ErrorCode::InsufficientData, "tracking needs at least 2 snapshots");

    std::vector<std::optional<FitResult<Real>>> fits(n);
    parallel_for(
        n,
        [&](std::size_t i) {
            try {
                fits[i] = fit_spectrum(traj.snapshots[i], options);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::EmptyWindow && e.code() != ErrorCode::NoiseFloor) throw;
            }
        },
        options.threads);

    SingularityTrace<Real> trace;
    const Real resolution = 2 * pi<Real>() / Real(traj.config.grid.n_modes());
    for (std::size_t i = 0; i < n; ++i) {
        if (!fits[i]) {
            trace.unresolved_times.push_back(traj.times[i]);
            continue;
        }
        trace.times.push_back(traj.times[i]);
        trace.fits.push_back(std::move(*fits[i]));
        if (trace.fits.back().delta < resolution) {
            trace.reached_resolution = true;
            break;
        }
    }

    const std::size_t m = std::min<std::size_t>(static_cast<std::size_t>(options.regression_samples), trace.fits.size());
    if (m < 3) return trace;
    const std::size_t first = trace.fits.size() - m;
    std::vector<double> t(m), y(m), a(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& f = trace.fits[first + i];
        t[i] = to_double(trace.times[first + i]);
        y[i] = std::pow(std::max(to_double(f.delta), 0.0), 1.0 / options.ts_exponent);
        a[i] = f.band_alpha;
    }
    const Line line = fit_line(t, y);
    if (!(line.slope < 0) || -line.slope <= options.ts_significance * std::sqrt(line.var_slope)) return trace;

    double ts = -line.intercept / line.slope;
    // Delta method on ts = -a/b.
    const double ga = -1.0 / line.slope;
    const double gb = line.intercept / (line.slope * line.slope);
    trace.t_s_stderr = std::sqrt(std::max(0.0, ga * ga * line.var_intercept + 2 * ga * gb * line.cov + gb * gb * line.var_slope));
    if (trace.fits.back().delta > 0) ts = std::max(ts, t.back());
    trace.t_s = ts;

    const Line alpha_line = fit_line(t, a);
    trace.alpha_at_ts = alpha_line.intercept + alpha_line.slope * ts;
    const double dx = ts - alpha_line.x_mean;
    trace.alpha_at_ts_stderr = std::sqrt(std::max(0.0, alpha_line.sigma2 * (1.0 / static_cast<double>(m) + dx * dx / alpha_line.sxx)));
    return trace;
}

template <class Real>
std::function<std::optional<Real>(const Spectrum<Real>&)> resolution_probe(TrackerOptions options) {
    return [options](const Spectrum<Real>& spec) -> std::optional<Real> {
        try {
            return fit_spectrum(spec, options).delta;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::EmptyWindow && e.code() != ErrorCode::NoiseFloor) throw;
            return std::nullopt;
        }
    };
}

#define BFAMILY_INSTANTIATE(Real)                                                                        \
    template LocalFit<Real> local_fit(const Spectrum<Real>&, int, double);                             \
    template SlidingFit<Real> sliding_fit(const Spectrum<Real>&, int, int, double);                    \
    template WynnResult<Real> wynn_epsilon(std::span<const Real>, double);                              \
    template FitWindow select_window(const Spectrum<Real>&, const TrackerOptions&);                     \
    template Real estimate_x_star(const Spectrum<Real>&, int, int);                                     \
    template FitResult<Real> fit_spectrum(const Spectrum<Real>&, const TrackerOptions&);                \
    template SingularityTrace<Real> track(const Trajectory<Real>&, const TrackerOptions&);              \
    template std::function<std::optional<Real>(const Spectrum<Real>&)> resolution_probe(TrackerOptions);

BFAMILY_INSTANTIATE(double)
BFAMILY_INSTANTIATE(Quad)

}  // namespace bfamily
