#include "bfamily/initial.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "bfamily/error.hpp"

namespace bfamily {

std::string_view to_string(InitialKind kind) {
    switch (kind) {
        case InitialKind::TypeI: return "I";
        case InitialKind::TypeII: return "II";
        case InitialKind::Custom: return "custom";
    }
    return "?";
}

InitialKind parse_initial_kind(std::string_view text) {
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "i" || s == "typei" || s == "type1" || s == "1") return InitialKind::TypeI;
    if (s == "ii" || s == "typeii" || s == "type2" || s == "2") return InitialKind::TypeII;
    if (s == "custom") return InitialKind::Custom;
    throw Error(ErrorCode::InvalidConfig, "unknown initial datum '" + std::string(text) + "'");
}

template <class Real>
PeriodicField<Real> sample_function(const GridSpec& grid, const std::function<Real(const Real&)>& f) {
    std::vector<Real> values(static_cast<std::size_t>(grid.n_modes()));
    for (int j = 0; j < grid.n_modes(); ++j) values[static_cast<std::size_t>(j)] = f(grid.x<Real>(j));
    return PeriodicField<Real>(grid, std::move(values));
}

template <class Real>
PeriodicField<Real> initial_datum(InitialKind kind, const GridSpec& grid) {
    using std::sin;
    switch (kind) {
        case InitialKind::TypeI:
            return sample_function<Real>(grid, [](const Real& x) { return Real(sin(x)); });
        case InitialKind::TypeII:
            return sample_function<Real>(grid, [](const Real& x) { return Real(1 + sin(x)); });
        case InitialKind::Custom: break;
    }
    throw Error(ErrorCode::InvalidConfig, "custom initial datum requires sampled values");
}

template <class Real>
PeriodicField<Real> initial_datum(const InitialCondition<Real>& initial, const GridSpec& grid) {
    if (initial.kind != InitialKind::Custom) return initial_datum<Real>(initial.kind, grid);
    if (!initial.custom) throw Error(ErrorCode::InvalidConfig, "custom initial datum has no values");
    if (!(initial.custom->grid() == grid)) {
        throw Error(ErrorCode::InvalidConfig, "custom initial datum lives on a different grid");
    }
    return *initial.custom;
}

template PeriodicField<double> sample_function(const GridSpec&, const std::function<double(const double&)>&);
template PeriodicField<Quad> sample_function(const GridSpec&, const std::function<Quad(const Quad&)>&);
template PeriodicField<double> initial_datum<double>(InitialKind, const GridSpec&);
template PeriodicField<Quad> initial_datum<Quad>(InitialKind, const GridSpec&);
template PeriodicField<double> initial_datum(const InitialCondition<double>&, const GridSpec&);
template PeriodicField<Quad> initial_datum(const InitialCondition<Quad>&, const GridSpec&);

}  // namespace bfamily
