#pragma once

#include "bfamily/scalar.hpp"

namespace bfamily {

/// Uniform periodic grid on [-pi, pi) with an even number of collocation points.
class GridSpec {
public:
    static constexpr int kMinModes = 8;

    int n_modes() const noexcept { return n_modes_; }
    /// Largest represented wavenumber magnitude, K/2.
    int nyquist() const noexcept { return n_modes_ / 2; }

    template <class Real>
    Real dx() const {
        return 2 * pi<Real>() / Real(n_modes_);
    }

    template <class Real>
    Real x(int j) const {
        return -pi<Real>() + Real(j) * dx<Real>();
    }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

private:
    explicit GridSpec(int n_modes) : n_modes_(n_modes) {}
    int n_modes_;

    friend GridSpec make_grid(int n_modes);
};

/// Throws Error(OddResolution) for odd K and Error(ResolutionTooSmall) for K < 8.
GridSpec make_grid(int n_modes);

}  // namespace bfamily
