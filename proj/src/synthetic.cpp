#include "bfamily/synthetic.hpp"

#include <cmath>

#include "bfamily/error.hpp"

namespace bfamily {

namespace {

// Coefficients for k = 0..n: c_k = (amp/2) binom(alpha,k) (-1)^k e^{-delta k} e^{-ik x*} for k >= 1.
template <class Real>
std::vector<Complex<Real>> coefficient_table(const SyntheticSpec<Real>& spec, int n) {
    using std::exp;
    using std::cos;
    using std::sin;
    std::vector<Complex<Real>> out(static_cast<std::size_t>(n + 1));
    out[0] = Complex<Real>(spec.amplitude, Real(0));
    const Real decay = exp(-spec.delta);
    Real magnitude = spec.amplitude / 2;  // binom(alpha, k) (-1)^k e^{-delta k}, signed
    for (int k = 1; k <= n; ++k) {
        magnitude *= -(spec.alpha - Real(k - 1)) / Real(k) * decay;
        const Real phase = -Real(k) * spec.x_star;
        out[static_cast<std::size_t>(k)] = Complex<Real>(magnitude * cos(phase), magnitude * sin(phase));
    }
    return out;
}

}  // namespace

template <class Real>
void validate(const SyntheticSpec<Real>& spec) {
    if (!(spec.delta > 0)) throw Error(ErrorCode::InvalidConfig, "synthetic delta must be positive");
    if (!(spec.amplitude > 0)) throw Error(ErrorCode::InvalidConfig, "synthetic amplitude must be positive");
    if (!is_finite(spec.alpha) || !is_finite(spec.x_star)) {
        throw Error(ErrorCode::InvalidConfig, "synthetic parameters must be finite");
    }
}

template <class Real>
PeriodicField<Real> oracle_field(const SyntheticSpec<Real>& spec, const GridSpec& grid) {
    using std::exp;
    using std::pow;
    validate(spec);
    const Real rho = exp(-spec.delta);
    std::vector<Real> values(static_cast<std::size_t>(grid.n_modes()));
    for (int j = 0; j < grid.n_modes(); ++j) {
        const Complex<Real> w = std::polar(rho, grid.x<Real>(j) - spec.x_star);
        values[static_cast<std::size_t>(j)] = spec.amplitude * pow(Complex<Real>(1) - w, spec.alpha).real();
    }
    return PeriodicField<Real>(grid, std::move(values));
}

template <class Real>
Complex<Real> oracle_coefficients(const SyntheticSpec<Real>& spec, int k) {
    validate(spec);
    const int n = k < 0 ? -k : k;
    const Complex<Real> c = coefficient_table(spec, n)[static_cast<std::size_t>(n)];
    return k < 0 ? std::conj(c) : c;
}

template <class Real>
Spectrum<Real> oracle_spectrum(const SyntheticSpec<Real>& spec, const GridSpec& grid) {
    validate(spec);
    const int h = grid.nyquist();
    auto table = coefficient_table(spec, h);
    table[static_cast<std::size_t>(h)] = Complex<Real>(2 * table[static_cast<std::size_t>(h)].real(), Real(0));
    return Spectrum<Real>::from_half(grid, std::move(table), Real(0));
}

template void validate(const SyntheticSpec<double>&);
template void validate(const SyntheticSpec<Quad>&);
template PeriodicField<double> oracle_field(const SyntheticSpec<double>&, const GridSpec&);
template PeriodicField<Quad> oracle_field(const SyntheticSpec<Quad>&, const GridSpec&);
template Complex<double> oracle_coefficients(const SyntheticSpec<double>&, int);
template Complex<Quad> oracle_coefficients(const SyntheticSpec<Quad>&, int);
template Spectrum<double> oracle_spectrum(const SyntheticSpec<double>&, const GridSpec&);
template Spectrum<Quad> oracle_spectrum(const SyntheticSpec<Quad>&, const GridSpec&);

}  // namespace bfamily
