#pragma once

#include "bfamily/field.hpp"

namespace bfamily {

/// f(x) = amplitude * Re[(1 - e^{-delta} e^{i(x - x_star)})^alpha], whose nearest complex
/// singularity is a branch point of character alpha at x_star + i delta.
/// Integer alpha >= 0 is accepted and gives a trigonometric polynomial (no singularity).
template <class Real>
struct SyntheticSpec {
    Real alpha = Real(1) / Real(3);
    Real delta = Real(0.2);
    Real x_star = Real(0);
    Real amplitude = Real(1);
};

/// Error(InvalidConfig) unless delta > 0 and amplitude > 0.
template <class Real>
void validate(const SyntheticSpec<Real>& spec);

template <class Real>
PeriodicField<Real> oracle_field(const SyntheticSpec<Real>& spec, const GridSpec& grid);

/// Exact series coefficient: amplitude at k = 0, and for k >= 1
/// (amplitude/2) binom(alpha, k) (-1)^k e^{-delta k} e^{-i k x_star}; negative k gives the conjugate.
/// Generated by the product recurrence, never through Gamma functions.
template <class Real>
Complex<Real> oracle_coefficients(const SyntheticSpec<Real>& spec, int k);

/// Exact coefficients for k = 0 .. K/2-1 placed in a Spectrum. The Nyquist entry holds the
/// aliased pair u_{K/2} + u_{-K/2}.
template <class Real>
Spectrum<Real> oracle_spectrum(const SyntheticSpec<Real>& spec, const GridSpec& grid);

}  // namespace bfamily
