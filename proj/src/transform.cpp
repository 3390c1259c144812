#include "bfamily/transform.hpp"

#include <map>
#include <mutex>
#include <string>

#include <fftw3.h>

#include "bfamily/error.hpp"

namespace bfamily {

namespace {

// FFTW has one API per scalar type; these adapters pick the right entry points.
template <class Real>
struct Fftw;

template <>
struct Fftw<double> {
    using plan = fftw_plan;
    using real = double;
    using complex = fftw_complex;
    static plan r2c(int n, real* r, complex* c) {
        return fftw_plan_dft_r2c_1d(n, r, c, FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    static plan c2r(int n, complex* c, real* r) {
        return fftw_plan_dft_c2r_1d(n, c, r, FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    static void exec_r2c(plan p, real* in, complex* out) { fftw_execute_dft_r2c(p, in, out); }
    static void exec_c2r(plan p, complex* in, real* out) { fftw_execute_dft_c2r(p, in, out); }
    static real* raw(double* x) { return x; }
};

template <>
struct Fftw<Quad> {
    using plan = fftwq_plan;
    using real = __float128;
    using complex = fftwq_complex;
    static plan r2c(int n, real* r, complex* c) {
        return fftwq_plan_dft_r2c_1d(n, r, c, FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    static plan c2r(int n, complex* c, real* r) {
        return fftwq_plan_dft_c2r_1d(n, c, r, FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    static void exec_r2c(plan p, real* in, complex* out) { fftwq_execute_dft_r2c(p, in, out); }
    static void exec_c2r(plan p, complex* in, real* out) { fftwq_execute_dft_c2r(p, in, out); }
    // boost's float128 is a thin wrapper holding a single __float128.
    static real* raw(Quad* x) { return reinterpret_cast<real*>(x); }
};

static_assert(sizeof(Quad) == sizeof(__float128));

template <class Real>
struct PlanPair {
    typename Fftw<Real>::plan forward;
    typename Fftw<Real>::plan inverse;
};

// Planning is not thread-safe in FFTW, execution with the new-array API is.
// Plans are created once per size and live for the whole process.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

template <class Real>
PlanPair<Real> plans_for(int n) {
    static std::map<int, PlanPair<Real>> cache;
    std::lock_guard lock(planner_mutex());
    auto it = cache.find(n);
    if (it == cache.end()) {
        using F = Fftw<Real>;
        // Scratch arrays only serve the planner; execution supplies its own buffers.
        std::vector<typename F::real> r(static_cast<std::size_t>(n));
        std::vector<typename F::real> cbuf(static_cast<std::size_t>(2 * (n / 2 + 1)));
        auto* c = reinterpret_cast<typename F::complex*>(cbuf.data());
        PlanPair<Real> p{F::r2c(n, r.data(), c), F::c2r(n, c, r.data())};
        if (!p.forward || !p.inverse) {
            throw Error(ErrorCode::InvalidConfig, "FFTW could not plan a transform of size " + std::to_string(n));
        }
        it = cache.emplace(n, p).first;
    }
    return it->second;
}

}  // namespace

template <class Real>
struct FourierTransform<Real>::Impl {
    GridSpec grid;
    PlanPair<Real> plans;
    std::vector<Real> real_buf;
    std::vector<Complex<Real>> complex_buf;
};

template <class Real>
FourierTransform<Real>::FourierTransform(GridSpec grid)
    : impl_(std::make_unique<Impl>(Impl{grid, plans_for<Real>(grid.n_modes()),
                                        std::vector<Real>(static_cast<std::size_t>(grid.n_modes())),
                                        std::vector<Complex<Real>>(static_cast<std::size_t>(grid.nyquist() + 1))})) {}

template <class Real>
FourierTransform<Real>::~FourierTransform() = default;
template <class Real>
FourierTransform<Real>::FourierTransform(FourierTransform&&) noexcept = default;
template <class Real>
FourierTransform<Real>& FourierTransform<Real>::operator=(FourierTransform&&) noexcept = default;

template <class Real>
const GridSpec& FourierTransform<Real>::grid() const noexcept {
    return impl_->grid;
}

// With x_j = -pi + j dx the shift gives u_k = (-1)^k X_k / K, X the plain DFT.
template <class Real>
void FourierTransform<Real>::forward(std::span<const Real> values, std::span<Complex<Real>> half) {
    using F = Fftw<Real>;
    const int n = impl_->grid.n_modes();
    const int h = n / 2;
    std::copy(values.begin(), values.end(), impl_->real_buf.begin());
    F::exec_r2c(impl_->plans.forward, F::raw(impl_->real_buf.data()),
                reinterpret_cast<typename F::complex*>(half.data()));
    const Real inv_n = Real(1) / Real(n);
    for (int k = 0; k <= h; ++k) {
        auto& c = half[static_cast<std::size_t>(k)];
        c *= (k % 2 == 0) ? inv_n : -inv_n;
    }
    half[0] = Complex<Real>(half[0].real(), Real(0));
    half[static_cast<std::size_t>(h)] = Complex<Real>(half[static_cast<std::size_t>(h)].real(), Real(0));
}

template <class Real>
void FourierTransform<Real>::inverse(std::span<const Complex<Real>> half, std::span<Real> values) {
    using F = Fftw<Real>;
    const int h = impl_->grid.nyquist();
    auto& buf = impl_->complex_buf;
    for (int k = 0; k <= h; ++k) {
        const auto& c = half[static_cast<std::size_t>(k)];
        buf[static_cast<std::size_t>(k)] = (k % 2 == 0) ? c : -c;
    }
    buf[0] = Complex<Real>(buf[0].real(), Real(0));
    buf[static_cast<std::size_t>(h)] = Complex<Real>(buf[static_cast<std::size_t>(h)].real(), Real(0));
    F::exec_c2r(impl_->plans.inverse, reinterpret_cast<typename F::complex*>(buf.data()), F::raw(values.data()));
}

template <class Real>
Spectrum<Real> forward_transform(const PeriodicField<Real>& field) {
    for (const auto& v : field.values()) {
        if (!is_finite(v)) throw Error(ErrorCode::NonFinite, "field holds non-finite samples");
    }
    FourierTransform<Real> fft(field.grid());
    Spectrum<Real> out(field.grid());
    fft.forward(field.values(), out.half_mutable());
    return out;
}

template <class Real>
PeriodicField<Real> inverse_transform(const Spectrum<Real>& spectrum) {
    using std::abs;
    if (!spectrum.all_finite()) throw Error(ErrorCode::NonFinite, "spectrum holds non-finite coefficients");
    const auto half = spectrum.half();
    const Real tol = Real(1000) * epsilon<Real>() * spectrum.max_abs();
    if (abs(half.front().imag()) > tol || abs(half.back().imag()) > tol) {
        throw Error(ErrorCode::SymmetryViolation, "mean or Nyquist coefficient is not real");
    }
    FourierTransform<Real> fft(spectrum.grid());
    std::vector<Real> values(static_cast<std::size_t>(spectrum.n_modes()));
    fft.inverse(half, values);
    return PeriodicField<Real>(spectrum.grid(), std::move(values));
}

template class FourierTransform<double>;
template class FourierTransform<Quad>;
template Spectrum<double> forward_transform(const PeriodicField<double>&);
template Spectrum<Quad> forward_transform(const PeriodicField<Quad>&);
template PeriodicField<double> inverse_transform(const Spectrum<double>&);
template PeriodicField<Quad> inverse_transform(const Spectrum<Quad>&);

}  // namespace bfamily
