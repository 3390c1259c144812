#pragma once

#include <span>
#include <vector>

#include "bfamily/grid.hpp"
#include "bfamily/scalar.hpp"

namespace bfamily {

/// Real samples u(x_j) on a periodic grid. Values are validated finite on construction.
template <class Real>
class PeriodicField {
public:
    PeriodicField(GridSpec grid, std::vector<Real> values);

    const GridSpec& grid() const noexcept { return grid_; }
    std::span<const Real> values() const noexcept { return values_; }
    const Real& operator[](int j) const { return values_[static_cast<std::size_t>(j)]; }
    int size() const noexcept { return static_cast<int>(values_.size()); }

private:
    GridSpec grid_;
    std::vector<Real> values_;
};

/// Fourier coefficients of a real periodic field, u_k for k = -K/2 .. K/2-1.
///
/// Only the non-negative half is stored: index k in [0, K/2) holds u_k and index K/2 holds
/// the Nyquist coefficient u_{-K/2}. Negative wavenumbers are reconstructed as conj(u_{-k}),
/// so Hermitian symmetry holds by construction; u_0 and the Nyquist entry are kept real.
template <class Real>
class Spectrum {
public:
    using value_type = Complex<Real>;

    explicit Spectrum(GridSpec grid);

    /// Takes the K/2+1 non-negative coefficients. Imaginary parts of u_0 and the Nyquist entry
    /// larger than `tolerance * max|u_k|` are rejected with Error(SymmetryViolation).
    static Spectrum from_half(GridSpec grid, std::vector<value_type> half, Real tolerance = Real(0));

    /// Takes all K coefficients ordered k = -K/2 .. K/2-1 and checks u_{-k} == conj(u_k).
    static Spectrum from_full(GridSpec grid, std::span<const value_type> coeffs, Real tolerance);

    const GridSpec& grid() const noexcept { return grid_; }
    int n_modes() const noexcept { return grid_.n_modes(); }

    /// Coefficient for any k in [-K/2, K/2-1].
    value_type at(int k) const;

    /// Sets u_k for 0 <= k <= K/2 (k = K/2 addresses the Nyquist entry); u_{-k} follows.
    void set(int k, value_type value);

    std::span<const value_type> half() const noexcept { return half_; }
    /// Mutable view of the stored half; callers must keep u_0 and the Nyquist entry real.
    std::span<value_type> half_mutable() noexcept { return half_; }

    /// All K coefficients ordered k = -K/2 .. K/2-1.
    std::vector<value_type> full() const;

    Real max_abs() const;
    bool all_finite() const;

private:
    Spectrum(GridSpec grid, std::vector<value_type> half);

    GridSpec grid_;
    std::vector<value_type> half_;
};

}  // namespace bfamily
