#include "bfamily/spectral.hpp"

#include "bfamily/error.hpp"

namespace bfamily {

namespace {

template <class Real>
Complex<Real> i_pow(int order) {
    switch (((order % 4) + 4) % 4) {
        case 0: return {Real(1), Real(0)};
        case 1: return {Real(0), Real(1)};
        case 2: return {Real(-1), Real(0)};
        default: return {Real(0), Real(-1)};
    }
}

template <class Real>
void truncate(std::span<Complex<Real>> half, int cutoff) {
    for (std::size_t k = static_cast<std::size_t>(cutoff) + 1; k < half.size(); ++k) half[k] = Complex<Real>(0);
}

template <class Real>
void require_finite(std::span<const Real> values, const char* what) {
    for (const auto& v : values) {
        if (!is_finite(v)) throw Error(ErrorCode::Overflow, std::string(what) + " overflowed in physical space");
    }
}

template <class Real>
void multiply_ik(std::span<const Complex<Real>> in, std::span<Complex<Real>> out) {
    const std::size_t h = in.size() - 1;
    for (std::size_t k = 0; k < h; ++k) out[k] = in[k] * Complex<Real>(Real(0), Real(static_cast<long>(k)));
    out[h] = Complex<Real>(0);
}

}  // namespace

template <class Real>
Spectrum<Real> derivative(const Spectrum<Real>& spec, int order) {
    if (order < 1) throw Error(ErrorCode::InvalidConfig, "derivative order must be positive");
    Spectrum<Real> out(spec.grid());
    auto dst = out.half_mutable();
    const auto src = spec.half();
    const int h = spec.grid().nyquist();
    const Complex<Real> unit = i_pow<Real>(order);
    for (int k = 0; k < h; ++k) {
        using std::pow;
        dst[static_cast<std::size_t>(k)] = src[static_cast<std::size_t>(k)] * unit * Real(pow(Real(k), order));
    }
    // (ik)^order at k = -K/2 is real only for even orders.
    if (order % 2 == 0) {
        using std::pow;
        dst[static_cast<std::size_t>(h)] = src[static_cast<std::size_t>(h)] * unit * Real(pow(Real(-h), order));
    }
    return out;
}

template <class Real>
Spectrum<Real> helmholtz_inverse_dx(const Spectrum<Real>& spec) {
    Spectrum<Real> out(spec.grid());
    auto dst = out.half_mutable();
    const auto src = spec.half();
    const int h = spec.grid().nyquist();
    for (int k = 1; k < h; ++k) {
        const Real kk(k);
        dst[static_cast<std::size_t>(k)] = src[static_cast<std::size_t>(k)] * Complex<Real>(Real(0), kk / (1 + kk * kk));
    }
    return out;
}

template <class Real>
NonlinearProducts<Real> nonlinear_products(const Spectrum<Real>& spec, const RhsOptions<Real>& opts) {
    const GridSpec grid = spec.grid();
    const auto n = static_cast<std::size_t>(grid.n_modes());
    const int cutoff = opts.dealias ? dealias_cutoff(grid) : grid.nyquist();
    FourierTransform<Real> fft(grid);

    std::vector<Complex<Real>> c(spec.half().begin(), spec.half().end());
    if (opts.dealias) truncate<Real>(c, cutoff);
    std::vector<Complex<Real>> cx(c.size());
    multiply_ik<Real>(c, cx);

    std::vector<Real> u(n), ux(n), p(n);
    fft.inverse(c, u);
    fft.inverse(cx, ux);
    require_finite<Real>(u, "u");
    require_finite<Real>(ux, "u_x");

    auto product = [&](auto f) {
        for (std::size_t j = 0; j < n; ++j) p[j] = f(j);
        require_finite<Real>(p, "nonlinear product");
        Spectrum<Real> s(grid);
        auto half = s.half_mutable();
        fft.forward(p, half);
        if (opts.dealias) truncate<Real>(half, cutoff);
        half.back() = Complex<Real>(0);
        return s;
    };
    return NonlinearProducts<Real>{
        product([&](std::size_t j) { return u[j] * ux[j]; }),
        product([&](std::size_t j) { return u[j] * u[j]; }),
        product([&](std::size_t j) { return ux[j] * ux[j]; }),
    };
}

template <class Real>
Spectrum<Real> rhs(const Spectrum<Real>& spec, const RhsOptions<Real>& opts) {
    const auto prod = nonlinear_products(spec, opts);
    Spectrum<Real> out(spec.grid());
    auto dst = out.half_mutable();
    const int h = spec.grid().nyquist();
    const Real half_b = opts.b / 2;
    const Real half_rest = (3 - opts.b) / 2;
    for (int k = 1; k < h; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const Real kk(k);
        const Complex<Real> symbol(Real(0), kk / (1 + kk * kk));
        dst[i] = -(prod.u_ux.half()[i] + symbol * (half_b * prod.u_sq.half()[i] + half_rest * prod.ux_sq.half()[i]));
    }
    return out;
}

template <class Real>
RhsEvaluator<Real>::RhsEvaluator(GridSpec grid, RhsOptions<Real> opts)
    : grid_(grid),
      opts_(opts),
      fft_(grid),
      work_(static_cast<std::size_t>(grid.nyquist() + 1)),
      combined_(static_cast<std::size_t>(grid.nyquist() + 1)),
      u_(static_cast<std::size_t>(grid.n_modes())),
      ux_(static_cast<std::size_t>(grid.n_modes())),
      p1_(static_cast<std::size_t>(grid.n_modes())),
      p2_(static_cast<std::size_t>(grid.n_modes())) {}

template <class Real>
void RhsEvaluator<Real>::operator()(std::span<const Complex<Real>> in, std::span<Complex<Real>> out) {
    const int h = grid_.nyquist();
    const int cutoff = opts_.dealias ? dealias_cutoff(grid_) : h;
    std::copy(in.begin(), in.end(), work_.begin());
    if (opts_.dealias) truncate<Real>(work_, cutoff);
    fft_.inverse(work_, u_);
    multiply_ik<Real>(std::span<const Complex<Real>>(work_), work_);
    fft_.inverse(work_, ux_);

    const Real half_b = opts_.b / 2;
    const Real half_rest = (3 - opts_.b) / 2;
    for (std::size_t j = 0; j < u_.size(); ++j) {
        p1_[j] = u_[j] * ux_[j];
        p2_[j] = half_b * u_[j] * u_[j] + half_rest * ux_[j] * ux_[j];
    }
    require_finite<Real>(p1_, "u u_x");
    require_finite<Real>(p2_, "nonlinear product");

    fft_.forward(p1_, out);
    fft_.forward(p2_, combined_);
    out[0] = Complex<Real>(0);
    for (int k = 1; k <= cutoff && k < h; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const Real kk(k);
        out[i] = -(out[i] + Complex<Real>(Real(0), kk / (1 + kk * kk)) * combined_[i]);
    }
    for (int k = std::min(cutoff + 1, h); k <= h; ++k) out[static_cast<std::size_t>(k)] = Complex<Real>(0);
}

template Spectrum<double> derivative(const Spectrum<double>&, int);
template Spectrum<Quad> derivative(const Spectrum<Quad>&, int);
template Spectrum<double> helmholtz_inverse_dx(const Spectrum<double>&);
template Spectrum<Quad> helmholtz_inverse_dx(const Spectrum<Quad>&);
template NonlinearProducts<double> nonlinear_products(const Spectrum<double>&, const RhsOptions<double>&);
template NonlinearProducts<Quad> nonlinear_products(const Spectrum<Quad>&, const RhsOptions<Quad>&);
template Spectrum<double> rhs(const Spectrum<double>&, const RhsOptions<double>&);
template Spectrum<Quad> rhs(const Spectrum<Quad>&, const RhsOptions<Quad>&);
template class RhsEvaluator<double>;
template class RhsEvaluator<Quad>;

}  // namespace bfamily
