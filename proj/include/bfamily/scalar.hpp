#pragma once

#include <complex>
#include <limits>
#include <string>
#include <string_view>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/float128.hpp>

namespace bfamily {

/// Extended scalar: IEEE binary128, 113-bit significand (~34 significant digits).
using Quad = boost::multiprecision::float128;

enum class Precision { Double, Extended };

template <class Real>
using Complex = std::complex<Real>;

template <class Real>
inline Real pi() {
    return boost::math::constants::pi<Real>();
}

template <class Real>
inline Real epsilon() {
    return std::numeric_limits<Real>::epsilon();
}

template <class Real>
inline bool is_finite(const Real& x) {
    using std::isfinite;
    using boost::multiprecision::isfinite;
    return isfinite(x);
}

template <class Real>
inline bool is_finite(const Complex<Real>& z) {
    return is_finite(z.real()) && is_finite(z.imag());
}

/// Parses a decimal literal directly into Real, so extended runs keep every digit.
template <class Real>
Real parse_real(std::string_view text);

/// Shortest round-trip decimal representation for the given scalar.
template <class Real>
std::string format_real(const Real& value);

template <class Real>
inline double to_double(const Real& x) {
    return static_cast<double>(x);
}

}  // namespace bfamily
