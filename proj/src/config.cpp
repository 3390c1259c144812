#include "bfamily/config.hpp"

#include <algorithm>
#include <cmath>

#include "bfamily/error.hpp"

namespace bfamily {

template <class Real>
Real default_dt(const PeriodicField<Real>& u0) {
    using std::abs;
    Real peak(0);
    for (const auto& v : u0.values()) peak = std::max(peak, Real(abs(v)));
    const Real cap(1e-4);
    if (peak == 0) return cap;
    return std::min(cap, Real(0.5) / (Real(u0.grid().n_modes()) * peak));
}

template <class Real>
int stride_for_interval(const Real& interval, const Real& dt) {
    using std::round;
    const double steps = to_double(Real(round(interval / dt)));
    return std::max(1, static_cast<int>(steps));
}

template <class Real>
void validate(const BFamilyConfig<Real>& config) {
    if (!is_finite(config.b)) throw Error(ErrorCode::InvalidConfig, "b must be finite");
    if (!(config.dt > 0) || !is_finite(config.dt)) throw Error(ErrorCode::InvalidConfig, "dt must be positive");
    if (!(config.t_end > 0) || !is_finite(config.t_end)) {
        throw Error(ErrorCode::InvalidConfig, "t_end must be positive");
    }
    if (config.sample_every < 1) throw Error(ErrorCode::InvalidConfig, "sample_every must be at least 1");
    if (config.initial.kind == InitialKind::Custom) {
        if (!config.initial.custom) throw Error(ErrorCode::InvalidConfig, "custom initial datum has no values");
        if (!(config.initial.custom->grid() == config.grid)) {
            throw Error(ErrorCode::InvalidConfig, "custom initial datum lives on a different grid");
        }
    }
}

template double default_dt(const PeriodicField<double>&);
template Quad default_dt(const PeriodicField<Quad>&);
template int stride_for_interval(const double&, const double&);
template int stride_for_interval(const Quad&, const Quad&);
template void validate(const BFamilyConfig<double>&);
template void validate(const BFamilyConfig<Quad>&);

}  // namespace bfamily
