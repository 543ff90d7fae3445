#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "nlslab/corpus.hpp"
#include "nlslab/dynamics.hpp"

using namespace nlslab;

namespace {
const Params kCubic = derive_params(3, 3.0);

RadialField gaussian(double amp, double a, std::size_t m = 4096, double r_max = 12.0) {
    return RadialField::sample(RadialGrid::uniform(r_max, m), kCubic,
                               [=](double r) { return amp * std::exp(-a * r * r); });
}
}  // namespace

TEST_CASE("energy of zero and small fields") {
    const auto z = RadialField::sample(RadialGrid::uniform(8.0, 128), kCubic,
                                       [](double) { return 0.0; });
    CHECK(energy(z) == 0.0);

    // small amplitude: gradient term dominates, E ~ eps^2 * (3/4) pi^{3/2}
    const double eps = 1e-3;
    const auto u = gaussian(eps, 0.5);
    const double lin = 0.5 * eps * eps * 1.5 * std::pow(M_PI, 1.5);
    CHECK(energy(u) == Catch::Approx(lin).epsilon(1e-3));
}

TEST_CASE("negative-energy threshold amplitude for A e^{-r^2}") {
    // E(A) = A^2/2 G2 - A^4/4 G4 with G2 = 3 pi^{3/2}/(2 sqrt 2),
    // G4 = pi^{3/2}/8; threshold A*^2 = 2 G2 / G4.
    const double g2 = 3.0 * std::pow(M_PI, 1.5) / (2.0 * std::sqrt(2.0));
    const double g4 = std::pow(M_PI, 1.5) / 8.0;
    const double a_star = std::sqrt(2.0 * g2 / g4);

    const auto below = gaussian(a_star * 0.99, 1.0);
    const auto above = gaussian(a_star * 1.01, 1.0);
    CHECK(energy(below) > 0.0);
    CHECK(energy(above) < 0.0);

    // quadrature agrees with the closed forms; the gradient picks up the
    // O(h^2) centered-difference bias, the plain power integral does not
    CHECK(gradient_norm_sq(gaussian(1.0, 1.0)) == Catch::Approx(g2).epsilon(1e-5));
    const double p4 = power_integrator(gaussian(1.0, 1.0), 4.0).total();
    CHECK(p4 == Catch::Approx(g4).epsilon(1e-8));  // \int e^{-4 r^2} dx
}

TEST_CASE("local mass against plateau and full-domain oracles") {
    const auto u = gaussian(1.0, 0.5);
    const auto chi_wide = CutoffSpec::chi(6.0);  // plateau covers the support
    const double l2sq = std::pow(lebesgue_norm(u, 2.0), 2.0);
    CHECK(local_mass(u, chi_wide) == Catch::Approx(l2sq).epsilon(1e-10));

    const auto z = RadialField::sample(u.grid_ptr(), kCubic, [](double) { return 0.0; });
    CHECK(local_mass(z, chi_wide) == 0.0);
}

TEST_CASE("momentum vanishes on real fields and matches the chirp oracle") {
    const auto u = gaussian(1.0, 0.5);
    const auto psi = CutoffSpec::psi(2.0);
    CHECK(momentum(u, psi) == Catch::Approx(0.0).margin(1e-14));

    // u = e^{i alpha r^2} g(r): Im(du conj(u)) = 2 alpha r g^2
    const double alpha = 0.7;
    const auto w = RadialField::sample(u.grid_ptr(), kCubic, [&](double r) {
        return std::polar(std::exp(-0.5 * r * r), alpha * r * r);
    });
    const auto mass = power_density(w, 2.0);
    std::vector<double> f(mass.size());
    const auto& r = w.grid().radii();
    for (std::size_t j = 0; j < f.size(); ++j)
        f[j] = psi.d1(r[j]) * 2.0 * alpha * r[j] * mass[j];
    const double oracle = RangeIntegrator(w.grid_ptr(), f).total();
    CHECK(momentum(w, psi) == Catch::Approx(oracle).epsilon(1e-4));
}

TEST_CASE("momentum obeys the Cauchy-Schwarz bound with C_psi") {
    CorpusSpec spec;
    spec.count = 100;
    spec.grid_points = 1024;
    spec.seed = 1234;
    const double c_psi = CutoffProfile::psi().derivative_bound();
    for (const auto& u : make_corpus(kCubic, spec)) {
        for (double R : {1.0, 4.0, 10.0}) {
            const auto psi = CutoffSpec::psi(R);
            const double bound = std::sqrt(c_psi) * gradient_norm(u) *
                                 std::sqrt(weighted_mass(u, psi));
            CHECK(std::abs(momentum(u, psi)) <= bound * (1 + 1e-9));
        }
    }
}

TEST_CASE("renormalized view has unit gradient norm and conjugates") {
    CorpusSpec spec;
    spec.count = 6;
    spec.grid_points = 2048;
    spec.seed = 88;
    for (const auto& u : make_corpus(kCubic, spec)) {
        const auto view = renormalized_view(u);
        CHECK(gradient_norm(view.field) == Catch::Approx(1.0).epsilon(1e-6));
        CHECK(view.focus_depth == Catch::Approx(-std::log(view.lambda)).epsilon(1e-14));
    }
    // lambda = e^{-10} => depth 10
    CHECK(-std::log(1e-10) > 0);  // guard against sign slips in the formula below
    const auto u = gaussian(1.0, 0.5);
    const auto view = renormalized_view(u);
    CHECK(view.lambda == Catch::Approx(std::pow(gradient_norm(u), -2.0)).epsilon(1e-12));
}

TEST_CASE("unit-gradient input renormalizes to a pure conjugation") {
    auto u0 = gaussian(1.0, 0.5);
    const double lam = lambda_of(u0);
    const auto unit = rescale_exact(u0, lam);  // now |grad| = 1
    const auto view = renormalized_view(unit);
    CHECK(view.lambda == Catch::Approx(1.0).epsilon(1e-10));
    for (std::size_t j = 0; j < unit.size(); j += 256) {
        CHECK(view.field.values()[j].real() ==
              Catch::Approx(unit.values()[j].real()).margin(1e-12));
        CHECK(view.field.values()[j].imag() ==
              Catch::Approx(-unit.values()[j].imag()).margin(1e-12));
    }
}

TEST_CASE("dispersive integral: closed forms") {
    const double s_c = 0.5;
    // constant gradient: integral = g^2 tau*^2 / 2 exactly (trapezoid exact)
    {
        std::vector<double> t, g2;
        for (int k = 0; k <= 100; ++k) {
            t.push_back(0.01 * k);
            g2.push_back(2.25);
        }
        const auto d = dispersive_integral(t, g2, 1.0, s_c);
        CHECK(d.value == Catch::Approx(2.25 * 0.5).epsilon(1e-12));
        CHECK(d.ratio == Catch::Approx(2.25 * 0.5).epsilon(1e-12));
        CHECK_THROWS_AS(dispersive_integral(t, g2, 2.0, s_c), RangeExceeded);
    }
    // self-similar law |grad v|^2 = c/tau^{1-s_c}: Beta(2, s_c) constant
    {
        const double c = 1.7, tau_star = 1.0;
        std::vector<double> t, g2;
        const int K = 5000;
        for (int k = 1; k <= K; ++k) {
            const double tau = tau_star * std::pow(double(k) / K, 4.0);
            t.push_back(tau);
            g2.push_back(c * std::pow(tau, s_c - 1.0));
        }
        const double beta = 1.0 / (s_c * (1.0 + s_c));  // B(2, s_c)
        const auto d = dispersive_integral(t, g2, tau_star, s_c);
        CHECK(d.value == Catch::Approx(c * beta * std::pow(tau_star, 1 + s_c)).epsilon(1e-4));
    }
}
