#include "bfamily/integrator.hpp"

#include <cmath>

#include "bfamily/error.hpp"

namespace bfamily {

std::string_view to_string(StopReason reason) {
    switch (reason) {
        case StopReason::ReachedTEnd: return "reached_t_end";
        case StopReason::ResolutionLimit: return "resolution_limit";
        case StopReason::Overflow: return "overflow";
    }
    return "?";
}

template <class Real>
Rk4Stepper<Real>::Rk4Stepper(GridSpec grid, RhsOptions<Real> opts) : rhs_(grid, opts) {
    const auto m = static_cast<std::size_t>(grid.nyquist() + 1);
    k1_.resize(m);
    k2_.resize(m);
    k3_.resize(m);
    k4_.resize(m);
    stage_.resize(m);
}

template <class Real>
void Rk4Stepper<Real>::step(std::vector<Complex<Real>>& state, const Real& dt) {
    const std::size_t m = state.size();
    const Real half = dt / 2;
    rhs_(state, k1_);
    for (std::size_t i = 0; i < m; ++i) stage_[i] = state[i] + half * k1_[i];
    rhs_(stage_, k2_);
    for (std::size_t i = 0; i < m; ++i) stage_[i] = state[i] + half * k2_[i];
    rhs_(stage_, k3_);
    for (std::size_t i = 0; i < m; ++i) stage_[i] = state[i] + dt * k3_[i];
    rhs_(stage_, k4_);
    const Real sixth = dt / 6;
    for (std::size_t i = 0; i < m; ++i) {
        stage_[i] = state[i] + sixth * (k1_[i] + Real(2) * k2_[i] + Real(2) * k3_[i] + k4_[i]);
        if (!is_finite(stage_[i])) throw Error(ErrorCode::Overflow, "spectrum overflowed during a step");
    }
    state.swap(stage_);
}

template <class Real>
Spectrum<Real> rk4_step(const Spectrum<Real>& spec, const Real& dt, const RhsOptions<Real>& opts) {
    if (!(dt > 0)) throw Error(ErrorCode::InvalidConfig, "dt must be positive");
    Rk4Stepper<Real> stepper(spec.grid(), opts);
    std::vector<Complex<Real>> state(spec.half().begin(), spec.half().end());
    stepper.step(state, dt);
    return Spectrum<Real>::from_half(spec.grid(), std::move(state), Real(1));
}

template <class Real>
Trajectory<Real> simulate(const BFamilyConfig<Real>& config) {
    validate(config);
    Trajectory<Real> traj;
    traj.config = config;

    const GridSpec grid = config.grid;
    const Spectrum<Real> initial = forward_transform(initial_datum(config.initial, grid));
    std::vector<Complex<Real>> state(initial.half().begin(), initial.half().end());
    Rk4Stepper<Real> stepper(grid, RhsOptions<Real>{config.b, config.dealias});
    const Real resolution = 2 * pi<Real>() / Real(grid.n_modes());

    // Returns true when the stop policy fires on the snapshot just recorded.
    auto record = [&](const Real& t) {
        traj.times.push_back(t);
        traj.snapshots.push_back(Spectrum<Real>::from_half(grid, state, Real(1)));
        if (!config.stop_policy.delta_probe) return false;
        const auto delta = config.stop_policy.delta_probe(traj.snapshots.back());
        return delta.has_value() && *delta < resolution;
    };

    using std::ceil;
    const Real ratio = config.t_end / config.dt;
    const long n_steps = std::max(1L, static_cast<long>(to_double(Real(ceil(ratio - Real(1e-9))))));

    if (record(Real(0))) {
        traj.stop_reason = StopReason::ResolutionLimit;
        return traj;
    }
    for (long n = 1; n <= n_steps; ++n) {
        const Real t = (n == n_steps) ? config.t_end : Real(n) * config.dt;
        const Real h = t - Real(n - 1) * config.dt;
        try {
            stepper.step(state, h);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Overflow) throw;
            traj.stop_reason = StopReason::Overflow;
            traj.detail = e.what();
            return traj;
        }
        traj.steps_taken = n;
        if (n % config.sample_every == 0 || n == n_steps) {
            if (record(t)) {
                traj.stop_reason = StopReason::ResolutionLimit;
                return traj;
            }
        }
    }
    traj.stop_reason = StopReason::ReachedTEnd;
    return traj;
}

template class Rk4Stepper<double>;
template class Rk4Stepper<Quad>;
template Spectrum<double> rk4_step(const Spectrum<double>&, const double&, const RhsOptions<double>&);
template Spectrum<Quad> rk4_step(const Spectrum<Quad>&, const Quad&, const RhsOptions<Quad>&);
template Trajectory<double> simulate(const BFamilyConfig<double>&);
template Trajectory<Quad> simulate(const BFamilyConfig<Quad>&);

}  // namespace bfamily
