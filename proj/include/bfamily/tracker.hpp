#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bfamily/integrator.hpp"

namespace bfamily {

// Fits |u_k| ~ C k^{-s} exp(-delta k), the large-k footprint of a singularity
// u(z) ~ (z - z*)^alpha at z* = x* + i delta, with s = 1 + alpha.

/// Three-point estimates at wavenumber k. `s` is the full decay exponent, alpha = s - 1.
template <class Real>
struct LocalFit {
    Real s;
    Real delta;
    Real log_c;
};

/// Sliding fit of length 3 centred at k. Requires 2 <= k <= K/2 - 2 and
/// |u_{k-1}|, |u_k|, |u_{k+1}| > noise_factor * eps * max|u|; else Error(NoiseFloor).
template <class Real>
LocalFit<Real> local_fit(const Spectrum<Real>& spec, int k, double noise_factor = 1e3);

template <class Real>
struct SlidingFit {
    std::vector<int> k;
    std::vector<Real> s, delta, log_c;
};

/// local_fit over k in [k_min, k_max], skipping inadmissible k. Error(EmptyWindow) if none remain.
template <class Real>
SlidingFit<Real> sliding_fit(const Spectrum<Real>& spec, int k_min, int k_max, double noise_factor = 1e3);

template <class Real>
struct WynnResult {
    Real limit;
    int depth = 0;            // even column the limit was taken from
    bool degenerate = false;  // all first differences negligible; limit is the last term
};

/// Wynn's epsilon algorithm. A denominator below singular_tol times the entry scale stops the
/// table; the last entry of the deepest completed even column is returned.
/// Throws Error(InsufficientData) for fewer than 3 terms.
template <class Real>
WynnResult<Real> wynn_epsilon(std::span<const Real> seq, double singular_tol = 1e-12);

struct TrackerOptions {
    int k_min = 8;               // lowered to max(2, k_max/4) on short spectra
    int k_max = 0;               // 0 = automatic
    double noise_factor = 1e3;   // participation floor, in units of eps * max|u|
    bool k2_noise_ceiling = true;  // window ends where |u_k| < noise_factor * eps * max|u| * k^2
    int aliasing_divisor = 4;    // window never extends past K / aliasing_divisor
    int max_ladder = 12;         // longest geometric ladder fed to the epsilon table
    int regression_samples = 5;  // trailing fits used for the blow-up time
    double ts_exponent = 1.5;    // delta ~ (t_s - t)^p; p = 1 is a straight line in delta
    double ts_significance = 3;  // slope must exceed this many standard errors
    unsigned threads = 0;        // 0 = hardware concurrency
};

struct FitWindow {
    int k_min;
    int k_max;
};

/// Admissible k range for `spec`; Error(EmptyWindow) if fewer than 3 usable modes exist.
template <class Real>
FitWindow select_window(const Spectrum<Real>& spec, const TrackerOptions& options);

/// k_min <= k_0 < k_1 < ... <= k_max with an exact constant ratio (2 or 3/2), longest first.
/// Empty if no ladder of at least 3 rungs fits.
std::vector<int> geometric_ladder(int k_min, int k_max, int max_length);

template <class Real>
struct FitResult {
    Real C;
    Real alpha;
    Real delta;       // clamped at 0
    Real x_star;      // in [-pi, pi)
    int k_min = 0;
    int k_max = 0;
    Real residual;    // RMS misfit of log|u_k| over the window
    Real raw_delta;   // before clamping
    bool delta_clamped = false;
    // Least-squares fit of log|u_k| = log C - s log k - delta k over the whole window.
    double band_alpha = 0;
    double band_delta = 0;
    int wynn_depth = 0;
    bool wynn_fallback = false;  // extrapolated limit out of range, highest-k value used
    std::vector<int> ladder;
    std::vector<Real> ladder_alpha;  // raw s(k) - 1 on the ladder
};

template <class Real>
FitResult<Real> fit_spectrum(const Spectrum<Real>& spec, const TrackerOptions& options = {});

/// Least-squares slope of the unwrapped phase of u_k over [k_min, k_max]. With the e^{-ikx}
/// forward convention a singularity at x* contributes phase -k x*, so x* = -slope mod 2pi.
template <class Real>
Real estimate_x_star(const Spectrum<Real>& spec, int k_min, int k_max);

template <class Real>
struct SingularityTrace {
    std::vector<Real> times;
    std::vector<FitResult<Real>> fits;
    std::vector<Real> unresolved_times;  // snapshots with no admissible window (entire at eps)
    bool reached_resolution = false;     // stopped at the first delta < 2pi/K
    std::optional<double> t_s;
    double t_s_stderr = 0;
    std::optional<double> alpha_at_ts;   // band exponent extrapolated to t_s
    double alpha_at_ts_stderr = 0;
};

/// Fits every snapshot (concurrently), keeps them up to and including the first one whose
/// delta falls below 2pi/K, then extrapolates delta^{1/p} linearly in t over the trailing fits.
/// t_s is left empty when the slope is not significantly negative.
/// Throws Error(InsufficientData) for trajectories with fewer than 2 snapshots.
template <class Real>
SingularityTrace<Real> track(const Trajectory<Real>& traj, const TrackerOptions& options = {});

/// Stop-policy probe reporting the fitted delta, or nothing for unfittable spectra.
template <class Real>
std::function<std::optional<Real>(const Spectrum<Real>&)> resolution_probe(TrackerOptions options = {});

}  // namespace bfamily
