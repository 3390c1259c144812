#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bfamily/config.hpp"
#include "bfamily/spectral.hpp"

namespace bfamily {

enum class StopReason { ReachedTEnd, ResolutionLimit, Overflow };

std::string_view to_string(StopReason reason);

template <class Real>
struct Trajectory {
    BFamilyConfig<Real> config;
    std::vector<Real> times;
    std::vector<Spectrum<Real>> snapshots;
    StopReason stop_reason = StopReason::ReachedTEnd;
    long steps_taken = 0;
    std::string detail;  // e.g. the overflow message
};

/// Classical four-stage RK4 with reusable stage buffers. One per thread.
template <class Real>
class Rk4Stepper {
public:
    Rk4Stepper(GridSpec grid, RhsOptions<Real> opts);

    /// Advances `state` (K/2+1 coefficients) in place. On Error(Overflow) the state is untouched.
    void step(std::vector<Complex<Real>>& state, const Real& dt);

private:
    RhsEvaluator<Real> rhs_;
    std::vector<Complex<Real>> k1_, k2_, k3_, k4_, stage_;
};

template <class Real>
Spectrum<Real> rk4_step(const Spectrum<Real>& spec, const Real& dt, const RhsOptions<Real>& opts);

/// Records t = 0, every `sample_every` steps, and the final state. The last step is shortened
/// so the run ends exactly at t_end. Overflow truncates the trajectory instead of throwing;
/// an invalid config throws Error(InvalidConfig) before any step.
template <class Real>
Trajectory<Real> simulate(const BFamilyConfig<Real>& config);

}  // namespace bfamily
