#include "bfamily/norms.hpp"

#include <cmath>
#include <limits>

#include "bfamily/error.hpp"

namespace bfamily {

namespace {

// Log of each squared weighted term 2 rho |k| + r log(1+k^2) + 2 log|u_k|, for every k in
// -K/2 .. K/2-1 (zero coefficients are skipped).
template <class Real>
struct LogTerms {
    std::vector<Real> value;
    std::vector<int> k;
};

template <class Real>
LogTerms<Real> log_terms(const Spectrum<Real>& spec, const GevreyParams<Real>& p) {
    using std::abs;
    using std::log;
    LogTerms<Real> out;
    const int h = spec.grid().nyquist();
    for (int k = -h; k < h; ++k) {
        const Real a = abs(spec.at(k));
        if (a == 0) continue;
        const Real kk(k < 0 ? -k : k);
        out.value.push_back(2 * p.rho * kk + p.r * log(1 + kk * kk) + 2 * log(a));
        out.k.push_back(k);
    }
    return out;
}

}  // namespace

template <class Real>
Real sobolev_norm(const Spectrum<Real>& spec, const Real& r) {
    return gevrey_norm(spec, GevreyParams<Real>{r, Real(0)});
}

template <class Real>
GevreyReport<Real> gevrey_report(const Spectrum<Real>& spec, const GevreyParams<Real>& params) {
    using std::exp;
    using std::log;
    using std::sqrt;
    if (params.rho < 0) throw Error(ErrorCode::InvalidConfig, "rho must be non-negative");
    const auto terms = log_terms(spec, params);
    if (terms.value.empty()) return {Real(0), Real(0), false};
    const Real peak = *std::max_element(terms.value.begin(), terms.value.end());
    Real total(0), tail(0);
    const int quarter = spec.n_modes() / 4;
    for (std::size_t i = 0; i < terms.value.size(); ++i) {
        const Real w = exp(terms.value[i] - peak);
        total += w;
        if (std::abs(terms.k[i]) > quarter) tail += w;
    }
    const Real log_norm = (log(2 * pi<Real>()) + peak + log(total)) / 2;
    if (!(log_norm < log(std::numeric_limits<Real>::max()))) {
        throw Error(ErrorCode::Overflow, "Gevrey norm exceeds the scalar range; rho is beyond the strip width");
    }
    const Real tail_fraction = tail / total;
    return {exp(log_norm), tail_fraction, tail_fraction > Real(0.5)};
}

template <class Real>
Real gevrey_norm(const Spectrum<Real>& spec, const GevreyParams<Real>& params) {
    return gevrey_report(spec, params).norm;
}

template <class Real>
RhoSeries<Real> rho_lower_bound(const Trajectory<Real>& traj, const Real& r, const Real& rho0, const Real& c1,
                                const Real& c2) {
    using std::exp;
    if (!(r > Real(1.5))) throw Error(ErrorCode::InvalidConfig, "Sobolev index r must exceed 3/2");
    if (rho0 < 0 || c1 < 0 || c2 < 0) throw Error(ErrorCode::InvalidConfig, "rho0, C1 and C2 must be non-negative");
    RhoSeries<Real> out;
    if (traj.snapshots.empty()) return out;

    const Real g0 = gevrey_norm(traj.snapshots.front(), GevreyParams<Real>{r, rho0});
    Real inner(0), outer(0);
    Real prev_cube(0), prev_integrand(0);
    for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
        const Real s = sobolev_norm(traj.snapshots[i], r);
        const Real cube = s * s * s;
        if (i > 0) {
            const Real h = traj.times[i] - traj.times[i - 1];
            inner += h * (prev_cube + cube) / 2;
        }
        const Real integrand = g0 + c1 * inner;
        if (i > 0) {
            const Real h = traj.times[i] - traj.times[i - 1];
            outer += h * (prev_integrand + integrand) / 2;
        }
        out.times.push_back(traj.times[i]);
        out.rho.push_back(rho0 * exp(-c2 * outer));
        prev_cube = cube;
        prev_integrand = integrand;
    }
    return out;
}

template double sobolev_norm(const Spectrum<double>&, const double&);
template Quad sobolev_norm(const Spectrum<Quad>&, const Quad&);
template double gevrey_norm(const Spectrum<double>&, const GevreyParams<double>&);
template Quad gevrey_norm(const Spectrum<Quad>&, const GevreyParams<Quad>&);
template GevreyReport<double> gevrey_report(const Spectrum<double>&, const GevreyParams<double>&);
template GevreyReport<Quad> gevrey_report(const Spectrum<Quad>&, const GevreyParams<Quad>&);
template RhoSeries<double> rho_lower_bound(const Trajectory<double>&, const double&, const double&, const double&,
                                           const double&);
template RhoSeries<Quad> rho_lower_bound(const Trajectory<Quad>&, const Quad&, const Quad&, const Quad&, const Quad&);

}  // namespace bfamily
