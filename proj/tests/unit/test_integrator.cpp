#include <doctest.h>

#include <cmath>

#include "bfamily/error.hpp"
#include "bfamily/integrator.hpp"
#include "oracles.hpp"

using namespace bfamily;
using bfamily::testing::cd;

namespace {

template <class Real>
Real distance(const Spectrum<Real>& a, const Spectrum<Real>& b) {
    using std::sqrt;
    Real acc(0);
    for (std::size_t k = 0; k < a.half().size(); ++k) acc += std::norm(a.half()[k] - b.half()[k]);
    return sqrt(acc);
}

template <class Real>
Spectrum<Real> advance(Spectrum<Real> s, const Real& dt, int steps, const RhsOptions<Real>& opts) {
    for (int i = 0; i < steps; ++i) s = rk4_step(s, dt, opts);
    return s;
}

BFamilyConfig<double> base_config(double b, InitialKind kind, int n, double t_end) {
    BFamilyConfig<double> c;
    c.b = b;
    c.grid = make_grid(n);
    c.dt = 1e-3;
    c.t_end = t_end;
    c.initial = kind == InitialKind::TypeI ? InitialCondition<double>::type_i() : InitialCondition<double>::type_ii();
    c.sample_every = 50;
    return c;
}

}  // namespace

TEST_CASE("constant state is a fixed point") {
    const auto g = make_grid(16);
    const auto s = forward_transform(sample_function<double>(g, [](const double&) { return 2.0; }));
    const auto next = rk4_step(s, 0.1, RhsOptions<double>{3.0, false});
    CHECK(distance(s, next) == 0.0);
}

TEST_CASE("local error of one step scales as dt^5 (extended precision)") {
    const auto g = make_grid(32);
    const auto s0 = forward_transform(initial_datum<Quad>(InitialKind::TypeI, g));
    const RhsOptions<Quad> opts{Quad(3), true};
    auto doubling_gap = [&](const Quad& dt) {
        return distance(rk4_step(s0, dt, opts), advance(s0, dt / 2, 2, opts));
    };
    const Quad ratio = doubling_gap(Quad(1e-3)) / doubling_gap(Quad(5e-4));
    CHECK(to_double(ratio) == doctest::Approx(32).epsilon(0.2));
}

TEST_CASE("local error of one step scales as dt^5 (double, coarse steps)") {
    const auto g = make_grid(32);
    const auto s0 = forward_transform(initial_datum<double>(InitialKind::TypeI, g));
    const RhsOptions<double> opts{3.0, true};
    auto doubling_gap = [&](double dt) { return distance(rk4_step(s0, dt, opts), advance(s0, dt / 2, 2, opts)); };
    CHECK(doubling_gap(0.04) / doubling_gap(0.02) == doctest::Approx(32).epsilon(0.2));
}

TEST_CASE("single step agrees with a fine-step reference to O(dt^5)") {
    const auto g = make_grid(32);
    const auto s0 = forward_transform(initial_datum<Quad>(InitialKind::TypeII, g));
    const RhsOptions<Quad> opts{Quad(2), true};
    auto error = [&](const Quad& dt) {
        return distance(rk4_step(s0, dt, opts), advance(s0, dt / 100, 100, opts));
    };
    const Quad e1 = error(Quad(2e-3));
    const Quad e2 = error(Quad(1e-3));
    CHECK(to_double(e1 / e2) == doctest::Approx(32).epsilon(0.2));
    CHECK(to_double(e1) < 1e-11);
}

TEST_CASE("fourth-order global convergence") {
    const auto g = make_grid(64);
    const auto s0 = forward_transform(initial_datum<double>(InitialKind::TypeI, g));
    const RhsOptions<double> opts{3.0, true};
    const double t = 0.4;
    const auto ref = advance(s0, t / 640, 640, opts);
    const double e1 = distance(advance(s0, t / 20, 20, opts), ref);
    const double e2 = distance(advance(s0, t / 40, 40, opts), ref);
    CHECK(e1 / e2 == doctest::Approx(16).epsilon(0.2));
}

TEST_CASE("simulate records snapshots on the stride and at the end") {
    auto c = base_config(3.0, InitialKind::TypeII, 64, 0.2);
    c.sample_every = 30;
    const auto tr = simulate(c);
    CHECK(tr.stop_reason == StopReason::ReachedTEnd);
    REQUIRE(tr.times.size() == 8);  // 0, 0.03, ..., 0.18, 0.2
    CHECK(tr.times.front() == 0.0);
    CHECK(tr.times[1] == doctest::Approx(0.03));
    CHECK(tr.times.back() == 0.2);
    for (std::size_t i = 1; i < tr.times.size(); ++i) CHECK(tr.times[i] > tr.times[i - 1]);
    for (const auto& s : tr.snapshots) {
        CHECK(s.grid() == c.grid);
        CHECK(s.half().front() == tr.snapshots.front().half().front());  // mean is exactly conserved
        CHECK(s.half().back().imag() == 0.0);
    }
    CHECK(tr.steps_taken == 200);
}

TEST_CASE("simulate with a non-multiple t_end lands exactly on t_end") {
    auto c = base_config(2.0, InitialKind::TypeI, 32, 0.0105);
    c.dt = 1e-3;
    const auto tr = simulate(c);
    CHECK(tr.times.back() == 0.0105);
    CHECK(tr.steps_taken == 11);
}

TEST_CASE("invalid configurations are rejected before stepping") {
    auto expect_invalid = [](BFamilyConfig<double> c) {
        try {
            simulate(c);
            FAIL("expected InvalidConfig");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InvalidConfig);
        }
    };
    auto c = base_config(3.0, InitialKind::TypeI, 32, 1.0);
    c.dt = 0;
    expect_invalid(c);
    c = base_config(3.0, InitialKind::TypeI, 32, 1.0);
    c.t_end = -1;
    expect_invalid(c);
    c = base_config(3.0, InitialKind::TypeI, 32, 1.0);
    c.sample_every = 0;
    expect_invalid(c);
    c = base_config(3.0, InitialKind::TypeI, 32, 1.0);
    c.initial = InitialCondition<double>{InitialKind::Custom, std::nullopt};
    expect_invalid(c);
}

TEST_CASE("overflow truncates the trajectory") {
    auto c = base_config(3.0, InitialKind::TypeI, 64, 500.0);
    c.dt = 0.5;  // far beyond stability
    c.sample_every = 1;
    const auto tr = simulate(c);
    CHECK(tr.stop_reason == StopReason::Overflow);
    CHECK(tr.times.back() < 500.0);
    CHECK(tr.snapshots.size() == tr.times.size());
    for (const auto& s : tr.snapshots) CHECK(s.all_finite());
    CHECK_FALSE(tr.detail.empty());
}

TEST_CASE("stop policy fires on the probe") {
    auto c = base_config(3.0, InitialKind::TypeI, 32, 1.0);
    c.sample_every = 10;
    int calls = 0;
    c.stop_policy.delta_probe = [&calls](const Spectrum<double>&) -> std::optional<double> {
        ++calls;
        if (calls < 3) return std::nullopt;
        return 1e-6;
    };
    const auto tr = simulate(c);
    CHECK(tr.stop_reason == StopReason::ResolutionLimit);
    CHECK(tr.times.size() == 3);
    CHECK(tr.times.back() == doctest::Approx(0.02));
}

TEST_CASE("b = -1 keeps sin x stationary and translates 1 + sin x at speed 1/2") {
    auto c = base_config(-1.0, InitialKind::TypeII, 32, 1.0);
    c.dt = 1e-3;
    c.sample_every = 1000;
    const auto tr = simulate(c);
    const auto f = inverse_transform(tr.snapshots.back());
    double err = 0;
    for (int j = 0; j < 32; ++j) err = std::max(err, std::abs(f[j] - (1 + std::sin(c.grid.x<double>(j) - 0.5))));
    CHECK(err < 1e-10);

    c.initial = InitialCondition<double>::type_i();
    const auto still = simulate(c);
    CHECK(distance(still.snapshots.back(), still.snapshots.front()) < 1e-14);
}

TEST_CASE("Camassa-Holm H1 energy is conserved by the truncated system") {
    auto c = base_config(2.0, InitialKind::TypeI, 128, 0.6);
    c.dealias = true;
    c.sample_every = 100;
    const auto tr = simulate(c);
    auto energy = [](const Spectrum<double>& s) {
        double e = 0;
        const int h = s.grid().nyquist();
        for (int k = -h; k < h; ++k) e += (1.0 + double(k) * k) * std::norm(s.at(k));
        return e;
    };
    const double e0 = energy(tr.snapshots.front());
    for (const auto& s : tr.snapshots) CHECK(std::abs(energy(s) - e0) / e0 < 1e-10);
}

TEST_CASE("default time step") {
    const auto g = make_grid(1024);
    CHECK(default_dt(initial_datum<double>(InitialKind::TypeI, g)) == doctest::Approx(1e-4));
    const auto big = sample_function<double>(g, [](const double& x) { return 100 * std::sin(x); });
    CHECK(default_dt(big) == doctest::Approx(0.5 / (1024 * 100)).epsilon(1e-6));
    CHECK(default_dt(sample_function<double>(g, [](const double&) { return 0.0; })) == 1e-4);
    CHECK(stride_for_interval(0.05, 1e-4) == 500);
    CHECK(stride_for_interval(1e-6, 1e-4) == 1);
}
