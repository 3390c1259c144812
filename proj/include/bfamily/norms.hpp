#pragma once

#include <vector>

#include "bfamily/integrator.hpp"

namespace bfamily {

/// Weights e^{2 rho |k|} (1 + k^2)^r in the Gevrey sum; rho >= 0.
template <class Real>
struct GevreyParams {
    Real r = Real(0);
    Real rho = Real(0);
};

/// (2 pi sum_k (1+k^2)^r |u_k|^2)^{1/2}, summed over k = -K/2 .. K/2-1.
template <class Real>
Real sobolev_norm(const Spectrum<Real>& spec, const Real& r);

/// (2 pi sum_k e^{2 rho |k|} (1+k^2)^r |u_k|^2)^{1/2}. Terms are accumulated in log space;
/// Error(Overflow) if the result leaves the scalar range.
template <class Real>
Real gevrey_norm(const Spectrum<Real>& spec, const GevreyParams<Real>& params);

template <class Real>
struct GevreyReport {
    Real norm;
    Real tail_fraction;  // share of the squared norm carried by |k| > K/4
    bool diverging;      // tail carries more than half: rho exceeds the strip width
};

template <class Real>
GevreyReport<Real> gevrey_report(const Spectrum<Real>& spec, const GevreyParams<Real>& params);

template <class Real>
struct RhoSeries {
    std::vector<Real> times;
    std::vector<Real> rho;
};

/// rho(t) = rho0 exp(-C2 int_0^t (|A^r e^{rho0 A} u0| + C1 int_0^t' |A^r u|^3 dt'') dt'),
/// with A^2 = 1 - d_xx, both integrals by the trapezoid rule over the snapshot times.
/// Requires r > 3/2, rho0 >= 0, C1 >= 0, C2 >= 0 (Error(InvalidConfig) otherwise).
template <class Real>
RhoSeries<Real> rho_lower_bound(const Trajectory<Real>& traj, const Real& r, const Real& rho0, const Real& c1 = Real(1),
                                const Real& c2 = Real(1));

}  // namespace bfamily
