#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "bfamily/field.hpp"

namespace bfamily {

/// TypeI: u0 = sin x. TypeII: u0 = 1 + sin x. Custom: caller-supplied samples.
enum class InitialKind { TypeI, TypeII, Custom };

std::string_view to_string(InitialKind kind);
/// Accepts "I"/"typeI"/"type1"/"II"/"typeII"/"type2"/"custom" (case-insensitive).
InitialKind parse_initial_kind(std::string_view text);

template <class Real>
struct InitialCondition {
    InitialKind kind = InitialKind::TypeI;
    std::optional<PeriodicField<Real>> custom;  // set iff kind == Custom

    static InitialCondition type_i() { return {InitialKind::TypeI, std::nullopt}; }
    static InitialCondition type_ii() { return {InitialKind::TypeII, std::nullopt}; }
    static InitialCondition from_field(PeriodicField<Real> field) { return {InitialKind::Custom, std::move(field)}; }
};

/// Samples f at the collocation points of `grid`.
template <class Real>
PeriodicField<Real> sample_function(const GridSpec& grid, const std::function<Real(const Real&)>& f);

/// Throws Error(InvalidConfig) for Custom, which has no intrinsic formula.
template <class Real>
PeriodicField<Real> initial_datum(InitialKind kind, const GridSpec& grid);

/// Custom data must live on `grid`; otherwise Error(InvalidConfig).
template <class Real>
PeriodicField<Real> initial_datum(const InitialCondition<Real>& initial, const GridSpec& grid);

}  // namespace bfamily
