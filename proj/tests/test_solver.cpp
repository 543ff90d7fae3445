#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>

#include "nlslab/checkpoint.hpp"
#include "nlslab/residuals.hpp"
#include "nlslab/scaling.hpp"
#include "nlslab/solver.hpp"
#include "test_paths.hpp"

using namespace nlslab;

namespace {
const Params kCubic = derive_params(3, 3.0);
}

TEST_CASE("free evolution matches the closed-form gaussian") {
    auto grid = RadialGrid::uniform(24.0, 4096);
    const auto u0 = RadialField::sample(grid, kCubic,
                                        [](double r) { return std::exp(-0.5 * r * r); });
    SolverConfig cfg;
    cfg.nonlinearity = 0.0;
    cfg.fixed_dt = 2.5e-4;
    cfg.stop.max_time = 0.5;
    cfg.stop.max_steps = 2000;
    cfg.record_every = 500;
    const auto res = run(u0, cfg);
    REQUIRE(res.final_time == Catch::Approx(0.5).epsilon(1e-12));

    // u(t, r) = (1+2it)^{-3/2} exp(-r^2 / (2(1+2it)))
    const cdouble w(1.0, 2.0 * 0.5);
    const cdouble amp = std::pow(w, cdouble(-1.5, 0.0));
    double num = 0, den = 0;
    const auto& r = grid->radii();
    const auto dens = power_density(res.final_field, 2.0);  // weights only
    for (std::size_t j = 0; j < r.size(); ++j) {
        const cdouble exact = amp * std::exp(-r[j] * r[j] / (2.0 * w));
        const double wj = kCubic.omega_n * r[j] * r[j];
        num += wj * std::norm(res.final_field.values()[j] - exact);
        den += wj * std::norm(exact);
    }
    CHECK(std::sqrt(num / den) < 1e-5);
}

TEST_CASE("discrete mass is conserved to rounding per step") {
    auto grid = RadialGrid::uniform(16.0, 2048);
    const auto u0 = RadialField::sample(grid, kCubic, [](double r) {
        return 2.0 * std::exp(-r * r) * std::polar(1.0, 0.3 * r * r);
    });
    Stepper st(grid, kCubic);
    auto state = u0.values();
    const double m0 = st.discrete_mass(state);
    for (int k = 0; k < 50; ++k) {
        const double before = st.discrete_mass(state);
        st.step_in_place(state, 1e-3);
        const double after = st.discrete_mass(state);
        CHECK(std::abs(after - before) <= 1e-12 * m0);
    }
}

TEST_CASE("zero data stays zero") {
    auto grid = RadialGrid::uniform(8.0, 256);
    const auto u0 = RadialField::sample(grid, kCubic, [](double) { return 0.0; });
    SolverConfig cfg;
    cfg.stop.max_time = 0.01;
    cfg.record_every = 4;
    const auto res = run(u0, cfg);
    CHECK(res.trajectory.stop_reason == "max-time");
    for (double v : res.trajectory.l2) CHECK(v == 0.0);
    for (double v : res.trajectory.grad_sq) CHECK(v == 0.0);
}

TEST_CASE("small data disperses: gradient norm relaxes, no blow-up") {
    auto grid = RadialGrid::uniform(32.0, 1024);
    const auto u0 = RadialField::sample(grid, kCubic,
                                        [](double r) { return 0.05 * std::exp(-0.5 * r * r); });
    SolverConfig cfg;
    cfg.stop.max_time = 1.0;
    cfg.stop.amplification = 10.0;
    cfg.record_every = 50;
    cfg.fixed_dt = 1e-3;
    const auto res = run(u0, cfg);
    CHECK(res.trajectory.stop_reason == "max-time");
    const auto& g = res.trajectory.grad_sq;
    for (std::size_t k = 1; k < g.size(); ++k) CHECK(g[k] <= g[k - 1] + 1e-9 * g.front());
    CHECK(g.back() < g.front());
}

TEST_CASE("scheme commutes with the scaling symmetry") {
    auto grid = RadialGrid::uniform(16.0, 2048);
    const auto u0 = RadialField::sample(grid, kCubic, [](double r) {
        return 1.5 * std::exp(-r * r) * std::polar(1.0, -0.2 * r * r);
    });
    const int nsteps = 64;
    const double dt = 1e-3;

    Stepper base(grid, kCubic);
    auto state = u0.values();
    for (int k = 0; k < nsteps; ++k) base.step_in_place(state, dt);
    const auto evolved_then_scaled = rescale_exact(u0.with_values(state), 2.0);

    const auto v0 = rescale_exact(u0, 2.0);  // lives on grid/2
    Stepper fine(v0.grid_ptr(), kCubic);
    auto vstate = v0.values();
    for (int k = 0; k < nsteps; ++k) fine.step_in_place(vstate, dt / 4.0);
    const auto scaled_then_evolved = v0.with_values(vstate);

    double worst = 0, scale = 0;
    for (std::size_t j = 0; j < vstate.size(); ++j) {
        worst = std::max(worst, std::abs(scaled_then_evolved.values()[j] -
                                         evolved_then_scaled.values()[j]));
        scale = std::max(scale, std::abs(vstate[j]));
    }
    CHECK(worst <= 1e-12 * scale);
}

TEST_CASE("conjugation reverses the flow") {
    auto grid = RadialGrid::uniform(16.0, 1024);
    const auto u0 = RadialField::sample(grid, kCubic, [](double r) {
        return std::exp(-0.7 * r * r) * std::polar(1.0, 0.4 * r * r);
    });
    const double dt = 5e-4;
    const auto v = step(u0, dt);
    const auto w = step(v.conjugated(), dt);  // forward on the conjugate = backward
    double worst = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
        worst = std::max(worst, std::abs(w.values()[j] - std::conj(u0.values()[j])));
    CHECK(worst <= 1e-12);
}

TEST_CASE("flux and virial residuals shrink 4x under joint refinement") {
    auto residual_at = [&](std::size_t m, double dt) {
        auto grid = RadialGrid::uniform(16.0, m);
        const auto u0 = RadialField::sample(
            grid, kCubic, [](double r) { return 1.5 * std::exp(-0.5 * r * r); });
        SolverConfig cfg;
        cfg.fixed_dt = dt;
        cfg.stop.max_time = 0.16;
        cfg.record_every = 2;
        cfg.diag.chi_scales = {2.0};
        cfg.diag.psi_scales = {2.0};
        cfg.diag.heavy_every = 0;
        const auto res = run(u0, cfg);
        return std::pair{flux_identity_residual(res.trajectory, CutoffKind::Chi, 0),
                         virial_identity_residual(res.trajectory, 0)};
    };
    const auto coarse = residual_at(512, 2e-3);
    const auto fine = residual_at(1024, 1e-3);
    CHECK(coarse.first / fine.first == Catch::Approx(4.0).epsilon(0.20));
    CHECK(coarse.second / fine.second == Catch::Approx(4.0).epsilon(0.20));
}

TEST_CASE("stationary phase rotation: flux residual collapses") {
    // real profile under pure phase rotation: both identity sides vanish;
    // here approximated by a tiny-amplitude field where the dynamics is
    // nearly linear and the chi mass is nearly frozen
    auto grid = RadialGrid::uniform(16.0, 1024);
    const auto u0 = RadialField::sample(grid, kCubic,
                                        [](double r) { return 1e-5 * std::exp(-r * r); });
    SolverConfig cfg;
    cfg.fixed_dt = 1e-3;
    cfg.stop.max_time = 0.05;
    cfg.record_every = 2;
    cfg.diag.chi_scales = {4.0};
    cfg.diag.heavy_every = 0;
    const auto res = run(u0, cfg);
    // not identically zero, but the residual must be far below the generic
    // nonlinear scale; the true stationary test lives with the profile module
    CHECK(flux_identity_residual(res.trajectory, CutoffKind::Chi, 0) < 1e-2);
}

TEST_CASE("sampling guard fires and the resimulation hook repairs it") {
    auto grid = RadialGrid::uniform(16.0, 512);
    const auto u0 = RadialField::sample(grid, kCubic,
                                        [](double r) { return 1.5 * std::exp(-0.5 * r * r); });
    SolverConfig cfg;
    cfg.fixed_dt = 1e-3;
    cfg.stop.max_time = 0.1;
    cfg.record_every = 25;  // far beyond 10x the step
    cfg.diag.chi_scales = {2.0};
    cfg.diag.psi_scales = {2.0};
    cfg.diag.heavy_every = 0;
    const auto res = run(u0, cfg);
    CHECK_THROWS_AS(flux_identity_residual(res.trajectory, CutoffKind::Chi, 0),
                    InsufficientSampling);
    SolverConfig dense = cfg;
    dense.record_every = 2;
    const double r = flux_identity_residual(res.trajectory, CutoffKind::Chi, 0,
                                            [&] { return run(u0, dense).trajectory; });
    CHECK(r < 1e-2);
}

TEST_CASE("checkpointed run resumes bit-identically") {
    auto grid = RadialGrid::uniform(16.0, 1024);
    const auto u0 = RadialField::sample(grid, kCubic, [](double r) {
        return 1.2 * std::exp(-0.6 * r * r) * std::polar(1.0, 0.1 * r * r);
    });
    SolverConfig cfg;
    cfg.record_every = 10;
    cfg.diag.heavy_every = 0;
    cfg.stop.max_steps = 200;
    const auto full = run(u0, cfg);

    SolverConfig half = cfg;
    half.stop.max_steps = 100;
    const auto part = run(u0, half);
    const auto stem = std::filesystem::path(kTestOutputDir) / "resume_ck";
    save_checkpoint(Checkpoint{part.final_field, part.final_time, part.steps, 0, 0}, stem);
    const auto ck = load_checkpoint(stem);
    CHECK(ck.steps == 100);

    const auto resumed = run(ck.field, half);
    REQUIRE(resumed.final_field.size() == full.final_field.size());
    for (std::size_t j = 0; j < full.final_field.size(); ++j) {
        CHECK(resumed.final_field.values()[j].real() == full.final_field.values()[j].real());
        CHECK(resumed.final_field.values()[j].imag() == full.final_field.values()[j].imag());
    }
}
