#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bfamily/error.hpp"
#include "bfamily/initial.hpp"
#include "bfamily/transform.hpp"
#include "oracles.hpp"

using namespace bfamily;
using bfamily::testing::cd;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::Io;
}

PeriodicField<double> sampled(const GridSpec& g, double (*f)(double)) {
    return sample_function<double>(g, [f](const double& x) { return f(x); });
}

}  // namespace

TEST_CASE("grid spacing and collocation points") {
    const auto g8 = make_grid(8);
    CHECK(g8.dx<double>() == doctest::Approx(kPi / 4));
    CHECK(g8.x<double>(0) == doctest::Approx(-kPi));
    CHECK(g8.x<double>(3) == doctest::Approx(-kPi / 4));
    CHECK(make_grid(4096).dx<double>() == doctest::Approx(2 * kPi / 4096));
    CHECK(code_of([] { make_grid(7); }) == ErrorCode::OddResolution);
    CHECK(code_of([] { make_grid(6); }) == ErrorCode::ResolutionTooSmall);
    CHECK(code_of([] { make_grid(0); }) == ErrorCode::ResolutionTooSmall);
}

TEST_CASE("forward transform of elementary fields") {
    const auto g = make_grid(32);
    SUBCASE("sin x") {
        const auto s = forward_transform(sampled(g, [](double x) { return std::sin(x); }));
        CHECK(std::abs(s.at(1) - cd(0, -0.5)) < 1e-15);
        CHECK(std::abs(s.at(-1) - cd(0, 0.5)) < 1e-15);
        for (int k = -16; k < 16; ++k) {
            if (k != 1 && k != -1) CHECK(std::abs(s.at(k)) < 1e-15);
        }
    }
    SUBCASE("constant") {
        const auto s = forward_transform(sampled(g, [](double) { return 1.0; }));
        CHECK(std::abs(s.at(0) - cd(1, 0)) < 1e-15);
        for (int k = 1; k <= 16; ++k) CHECK(std::abs(s.half()[static_cast<std::size_t>(k)]) < 1e-15);
    }
    SUBCASE("1 + sin x") {
        const auto s = forward_transform(initial_datum<double>(InitialKind::TypeII, g));
        CHECK(std::abs(s.at(0) - cd(1, 0)) < 1e-15);
        CHECK(std::abs(s.at(1) - cd(0, -0.5)) < 1e-15);
        CHECK(std::abs(s.at(-1) - cd(0, 0.5)) < 1e-15);
    }
    SUBCASE("agrees with the direct sum") {
        const auto f = sampled(g, [](double x) { return std::exp(std::cos(x - 0.3)) + 0.2 * std::sin(5 * x); });
        const auto s = forward_transform(f);
        for (int k = -16; k < 16; ++k) CHECK(std::abs(s.at(k) - testing::direct_coefficient(f, k)) < 1e-14);
    }
}

TEST_CASE("inverse transform examples") {
    const auto g = make_grid(16);
    Spectrum<double> s(g);
    s.set(1, cd(0, -0.5));
    const auto f = inverse_transform(s);
    for (int j = 0; j < 16; ++j) CHECK(f[j] == doctest::Approx(std::sin(g.x<double>(j))).epsilon(1e-14));
    const auto z = inverse_transform(Spectrum<double>(g));
    for (int j = 0; j < 16; ++j) CHECK(z[j] == 0.0);
}

TEST_CASE("round trips and Parseval over random fields") {
    std::mt19937_64 rng(7);
    for (int n : {8, 16, 64, 256, 1024}) {
        const auto g = make_grid(n);
        for (int trial = 0; trial < 10; ++trial) {
            const auto s = testing::random_spectrum(g, rng);
            const auto f = inverse_transform(s);
            const auto back = forward_transform(f);
            const double scale = s.max_abs();
            for (std::size_t k = 0; k < s.half().size(); ++k) {
                CHECK(std::abs(back.half()[k] - s.half()[k]) <= 1e3 * kEps * scale);
            }
            const auto f2 = inverse_transform(back);
            double fscale = 0;
            for (double v : f.values()) fscale = std::max(fscale, std::abs(v));
            for (int j = 0; j < n; ++j) CHECK(std::abs(f2[j] - f[j]) <= 1e3 * kEps * fscale);

            double energy_x = 0, energy_k = 0;
            for (double v : f.values()) energy_x += v * v;
            energy_x /= n;
            for (int k = -n / 2; k < n / 2; ++k) energy_k += std::norm(s.at(k));
            CHECK(energy_x == doctest::Approx(energy_k).epsilon(1e-12));
        }
    }
}

TEST_CASE("forward output is exactly Hermitian for real input") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    const auto g = make_grid(64);
    std::vector<double> v(64);
    for (auto& x : v) x = u(rng);
    const auto s = forward_transform(PeriodicField<double>(g, v));
    CHECK(s.at(0).imag() == 0.0);
    CHECK(s.at(-32).imag() == 0.0);
    const auto full = s.full();
    for (int k = 1; k < 32; ++k) CHECK(full[static_cast<std::size_t>(32 - k)] == std::conj(full[static_cast<std::size_t>(32 + k)]));
}

TEST_CASE("spectrum construction rejects broken symmetry") {
    const auto g = make_grid(8);
    std::vector<cd> full(8, cd(0));
    full[4 + 1] = cd(1, 1);
    full[4 - 1] = cd(1, 1);  // should be the conjugate
    CHECK(code_of([&] { Spectrum<double>::from_full(g, full, 1e-12); }) == ErrorCode::SymmetryViolation);
    full[4 - 1] = cd(1, -1);
    const auto s = Spectrum<double>::from_full(g, full, 1e-12);
    CHECK(s.at(1) == cd(1, 1));
    CHECK(s.at(-1) == cd(1, -1));

    std::vector<cd> half(5, cd(0));
    half[0] = cd(1, 0.5);
    CHECK(code_of([&] { Spectrum<double>::from_half(g, half); }) == ErrorCode::SymmetryViolation);

    Spectrum<double> broken(g);
    broken.half_mutable()[0] = cd(1, 1);
    CHECK(code_of([&] { inverse_transform(broken); }) == ErrorCode::SymmetryViolation);
}

TEST_CASE("non-finite input is rejected") {
    const auto g = make_grid(8);
    std::vector<double> v(8, 0.0);
    v[3] = std::nan("");
    CHECK(code_of([&] { PeriodicField<double>(g, v); }) == ErrorCode::NonFinite);
    std::vector<cd> half(5, cd(0));
    half[2] = cd(INFINITY, 0);
    CHECK(code_of([&] { Spectrum<double>::from_half(g, half); }) == ErrorCode::NonFinite);
}

TEST_CASE("initial data") {
    const auto g = make_grid(64);
    const auto one = initial_datum<double>(InitialKind::TypeI, g);
    const auto two = initial_datum<double>(InitialKind::TypeII, g);
    for (int j = 0; j < 64; ++j) {
        CHECK(one[j] == doctest::Approx(std::sin(g.x<double>(j))));
        CHECK(two[j] == doctest::Approx(1 + std::sin(g.x<double>(j))));
    }
    const auto custom = sampled(g, [](double x) { return std::cos(2 * x); });
    const auto c = initial_datum(InitialCondition<double>::from_field(custom), g);
    for (int j = 0; j < 64; ++j) CHECK(c[j] == custom[j]);
    CHECK(code_of([&] { initial_datum(InitialCondition<double>::from_field(custom), make_grid(32)); }) ==
          ErrorCode::InvalidConfig);
    CHECK(parse_initial_kind("II") == InitialKind::TypeII);
    CHECK(parse_initial_kind("typeI") == InitialKind::TypeI);
    CHECK(code_of([] { parse_initial_kind("three"); }) == ErrorCode::InvalidConfig);
}

TEST_CASE("extended precision transform round trip") {
    const auto g = make_grid(64);
    const auto f = sample_function<Quad>(g, [](const Quad& x) { return Quad(exp(cos(x)) + sin(3 * x)); });
    const auto s = forward_transform(f);
    const auto back = inverse_transform(s);
    Quad err(0);
    for (int j = 0; j < 64; ++j) err = std::max(err, Quad(abs(back[j] - f[j])));
    CHECK(err < Quad(1e3) * std::numeric_limits<Quad>::epsilon() * 4);
    // sin 3x contributes exactly -i/2 at k = 3 on top of the Bessel coefficient of e^{cos x}, which is real.
    CHECK(abs(s.at(3).imag() + Quad(0.5)) < Quad(1e-30));
}

TEST_CASE("scalar parsing and formatting") {
    CHECK(parse_real<double>("0.8295") == 0.8295);
    CHECK(parse_real<double>(" 1e-4 ") == 1e-4);
    CHECK(code_of([] { parse_real<double>("1.0x"); }) == ErrorCode::InvalidConfig);
    const Quad third = parse_real<Quad>("0.3333333333333333333333333333333333");
    CHECK(abs(third - Quad(1) / 3) < Quad(1e-33));
    CHECK(parse_real<double>(format_real(0.1)) == 0.1);
    CHECK(parse_real<Quad>(format_real(Quad(1) / 3)) == Quad(1) / 3);
}
