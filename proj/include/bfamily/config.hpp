#pragma once

#include <functional>
#include <optional>

#include "bfamily/initial.hpp"

namespace bfamily {

/// Early-termination rule for a run. The probe, when set, is called on every recorded snapshot
/// and returns the current strip-width estimate (or nothing if it cannot fit); the run stops once
/// that estimate drops below one grid wavelength 2*pi/K. Overflow always stops the run.
template <class Real>
struct StopPolicy {
    std::function<std::optional<Real>(const Spectrum<Real>&)> delta_probe;
};

template <class Real>
struct BFamilyConfig {
    Real b = Real(3);
    GridSpec grid = make_grid(256);
    Real dt = Real(1e-4);
    Real t_end = Real(1);
    InitialCondition<Real> initial = InitialCondition<Real>::type_i();
    bool dealias = false;
    int sample_every = 500;  // steps between snapshots
    StopPolicy<Real> stop_policy;
};

/// min(1e-4, 0.5 / (K max|u0|)); 1e-4 for a zero datum.
template <class Real>
Real default_dt(const PeriodicField<Real>& u0);

/// Steps per snapshot closest to `interval` time units, at least 1.
template <class Real>
int stride_for_interval(const Real& interval, const Real& dt);

/// Throws Error(InvalidConfig) on dt <= 0, t_end <= 0, sample_every < 1 or non-finite b.
template <class Real>
void validate(const BFamilyConfig<Real>& config);

}  // namespace bfamily
