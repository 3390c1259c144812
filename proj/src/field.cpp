#include "bfamily/field.hpp"

#include <algorithm>
#include <string>

#include "bfamily/error.hpp"

namespace bfamily {

template <class Real>
PeriodicField<Real>::PeriodicField(GridSpec grid, std::vector<Real> values)
    : grid_(grid), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != grid_.n_modes()) {
        throw Error(ErrorCode::InvalidConfig, "field has " + std::to_string(values_.size()) +
                                                  " samples, grid expects " + std::to_string(grid_.n_modes()));
    }
    for (std::size_t j = 0; j < values_.size(); ++j) {
        if (!is_finite(values_[j])) {
            throw Error(ErrorCode::NonFinite, "field sample " + std::to_string(j) + " is not finite");
        }
    }
}

template <class Real>
Spectrum<Real>::Spectrum(GridSpec grid)
    : grid_(grid), half_(static_cast<std::size_t>(grid.nyquist() + 1), value_type(0)) {}

template <class Real>
Spectrum<Real>::Spectrum(GridSpec grid, std::vector<value_type> half) : grid_(grid), half_(std::move(half)) {}

template <class Real>
Spectrum<Real> Spectrum<Real>::from_half(GridSpec grid, std::vector<value_type> half, Real tolerance) {
    using std::abs;
    if (static_cast<int>(half.size()) != grid.nyquist() + 1) {
        throw Error(ErrorCode::InvalidConfig, "expected " + std::to_string(grid.nyquist() + 1) +
                                                  " coefficients, got " + std::to_string(half.size()));
    }
    Real scale(0);
    for (const auto& c : half) {
        if (!is_finite(c)) throw Error(ErrorCode::NonFinite, "non-finite Fourier coefficient");
        scale = std::max(scale, Real(abs(c)));
    }
    for (std::size_t idx : {std::size_t(0), half.size() - 1}) {
        if (abs(half[idx].imag()) > tolerance * scale) {
            throw Error(ErrorCode::SymmetryViolation,
                        "coefficient " + std::to_string(idx) + " of a real field must be real");
        }
        half[idx] = value_type(half[idx].real(), Real(0));
    }
    return Spectrum(grid, std::move(half));
}

template <class Real>
Spectrum<Real> Spectrum<Real>::from_full(GridSpec grid, std::span<const value_type> coeffs, Real tolerance) {
    using std::abs;
    const int n = grid.n_modes();
    const int h = grid.nyquist();
    if (static_cast<int>(coeffs.size()) != n) {
        throw Error(ErrorCode::InvalidConfig,
                    "expected " + std::to_string(n) + " coefficients, got " + std::to_string(coeffs.size()));
    }
    auto c = [&](int k) { return coeffs[static_cast<std::size_t>(k + h)]; };
    Real scale(0);
    for (const auto& z : coeffs) {
        if (!is_finite(z)) throw Error(ErrorCode::NonFinite, "non-finite Fourier coefficient");
        scale = std::max(scale, Real(abs(z)));
    }
    for (int k = 1; k < h; ++k) {
        if (abs(c(-k) - std::conj(c(k))) > tolerance * scale) {
            throw Error(ErrorCode::SymmetryViolation, "u_{-k} != conj(u_k) at k = " + std::to_string(k));
        }
    }
    std::vector<value_type> half(static_cast<std::size_t>(h + 1));
    for (int k = 0; k < h; ++k) half[static_cast<std::size_t>(k)] = c(k);
    half[static_cast<std::size_t>(h)] = c(-h);
    return from_half(grid, std::move(half), tolerance);
}

template <class Real>
auto Spectrum<Real>::at(int k) const -> value_type {
    const int h = grid_.nyquist();
    if (k < -h || k >= h) {
        throw Error(ErrorCode::InvalidConfig, "wavenumber " + std::to_string(k) + " out of range");
    }
    if (k == -h) return half_[static_cast<std::size_t>(h)];
    if (k >= 0) return half_[static_cast<std::size_t>(k)];
    return std::conj(half_[static_cast<std::size_t>(-k)]);
}

template <class Real>
void Spectrum<Real>::set(int k, value_type value) {
    const int h = grid_.nyquist();
    if (k < 0 || k > h) {
        throw Error(ErrorCode::InvalidConfig, "set() takes 0 <= k <= K/2, got " + std::to_string(k));
    }
    if (k == 0 || k == h) value = value_type(value.real(), Real(0));
    half_[static_cast<std::size_t>(k)] = value;
}

template <class Real>
auto Spectrum<Real>::full() const -> std::vector<value_type> {
    const int h = grid_.nyquist();
    std::vector<value_type> out(static_cast<std::size_t>(2 * h));
    for (int k = -h; k < h; ++k) out[static_cast<std::size_t>(k + h)] = at(k);
    return out;
}

template <class Real>
Real Spectrum<Real>::max_abs() const {
    using std::abs;
    Real m(0);
    for (const auto& c : half_) m = std::max(m, Real(abs(c)));
    return m;
}

template <class Real>
bool Spectrum<Real>::all_finite() const {
    return std::all_of(half_.begin(), half_.end(), [](const value_type& c) { return is_finite(c); });
}

template class PeriodicField<double>;
template class PeriodicField<Quad>;
template class Spectrum<double>;
template class Spectrum<Quad>;

}  // namespace bfamily
