#pragma once

#include <memory>
#include <span>

#include "bfamily/field.hpp"

namespace bfamily {

/// Reusable FFT workspace for one grid size. Not shareable between threads; create one per
/// thread. Plans come from a process-wide cache, so construction after the first is cheap.
///
/// Convention: u_k = (1/K) sum_j u(x_j) exp(-i k x_j), x_j = -pi + j dx.
template <class Real>
class FourierTransform {
public:
    explicit FourierTransform(GridSpec grid);
    ~FourierTransform();
    FourierTransform(FourierTransform&&) noexcept;
    FourierTransform& operator=(FourierTransform&&) noexcept;
    FourierTransform(const FourierTransform&) = delete;
    FourierTransform& operator=(const FourierTransform&) = delete;

    const GridSpec& grid() const noexcept;

    /// values: K samples. half: K/2+1 coefficients (index K/2 is the Nyquist entry).
    void forward(std::span<const Real> values, std::span<Complex<Real>> half);
    /// half: K/2+1 coefficients. values: K samples. The input is not modified.
    void inverse(std::span<const Complex<Real>> half, std::span<Real> values);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Throws Error(NonFinite) if the field holds non-finite samples.
template <class Real>
Spectrum<Real> forward_transform(const PeriodicField<Real>& field);

/// Throws Error(SymmetryViolation) if u_0 or the Nyquist coefficient carries an imaginary part
/// beyond round-off, and Error(NonFinite) for non-finite coefficients.
template <class Real>
PeriodicField<Real> inverse_transform(const Spectrum<Real>& spectrum);

}  // namespace bfamily
