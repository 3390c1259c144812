#pragma once

#include <span>

#include "bfamily/transform.hpp"

namespace bfamily {

template <class Real>
struct RhsOptions {
    Real b = Real(3);
    bool dealias = false;  // 2/3 rule: keep |k| <= (K-1)/3
};

/// Largest wavenumber kept by the 2/3 rule on a K-point grid.
inline int dealias_cutoff(const GridSpec& grid) { return (grid.n_modes() - 1) / 3; }

/// Multiplies u_k by (ik)^order. For odd orders the Nyquist entry is zeroed, since (ik)^order
/// is not real there and the result would not describe a real field.
template <class Real>
Spectrum<Real> derivative(const Spectrum<Real>& spec, int order);

/// u_k -> ik/(1+k^2) u_k, the symbol of (1 - d_xx)^{-1} d_x. Nyquist entry zeroed.
template <class Real>
Spectrum<Real> helmholtz_inverse_dx(const Spectrum<Real>& spec);

template <class Real>
struct NonlinearProducts {
    Spectrum<Real> u_ux;   // transform of u u_x
    Spectrum<Real> u_sq;   // transform of u^2
    Spectrum<Real> ux_sq;  // transform of u_x^2
};

/// Pseudospectral products. With dealiasing the input and the products are truncated to the
/// 2/3 band. Nyquist entries of the products are zeroed. Throws Error(Overflow) when the
/// physical-space values stop being finite.
template <class Real>
NonlinearProducts<Real> nonlinear_products(const Spectrum<Real>& spec, const RhsOptions<Real>& opts);

/// d/dt u_k = -[(u u_x)_k + ik/(1+k^2) ((b/2)(u^2)_k + ((3-b)/2)(u_x^2)_k)].
/// The k = 0 entry of the result is exactly zero.
template <class Real>
Spectrum<Real> rhs(const Spectrum<Real>& spec, const RhsOptions<Real>& opts);

/// Allocation-free evaluator of the same right-hand side for the time loop. One per thread.
template <class Real>
class RhsEvaluator {
public:
    RhsEvaluator(GridSpec grid, RhsOptions<Real> opts);

    const RhsOptions<Real>& options() const noexcept { return opts_; }
    const GridSpec& grid() const noexcept { return grid_; }

    /// in/out hold K/2+1 coefficients in the Spectrum half layout; they may not alias.
    void operator()(std::span<const Complex<Real>> in, std::span<Complex<Real>> out);

private:
    GridSpec grid_;
    RhsOptions<Real> opts_;
    FourierTransform<Real> fft_;
    std::vector<Complex<Real>> work_;
    std::vector<Complex<Real>> combined_;
    std::vector<Real> u_, ux_, p1_, p2_;
};

}  // namespace bfamily
