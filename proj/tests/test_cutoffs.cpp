#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "nlslab/cutoffs.hpp"

using namespace nlslab;

TEST_CASE("psi profile: quadratic plateau, septic bridge, zero tail") {
    const auto& psi = CutoffProfile::psi();
    CHECK(psi.eval(1.0, 0) == Catch::Approx(0.5));
    CHECK(psi.eval(2.0, 0) == Catch::Approx(2.0));
    CHECK(psi.eval(3.0, 0) == 0.0);
    CHECK(psi.eval(3.5, 2) == 0.0);

    // C^3 matching at both bridge ends; the 4th derivative jumps there,
    // so the offset leaks |psi''''| * eps ~ 3e3 * 1e-9 into d = 3
    for (int d = 0; d <= 3; ++d) {
        CHECK(psi.eval(2.0 + 1e-9, d) == Catch::Approx(psi.eval(2.0 - 1e-9, d)).margin(1e-5));
        CHECK(std::abs(psi.eval(3.0 - 1e-9, d)) < 1e-5);
    }

    // psi stays nonnegative on the bridge and |psi'|^2 <= C_psi psi
    const double c_psi = psi.derivative_bound();
    CHECK(c_psi > 0.0);
    for (int i = 0; i <= 3000; ++i) {
        const double s = 3.0 * i / 3000.0;
        const double v = psi.eval(s, 0);
        CHECK(v >= -1e-13);
        if (v > 1e-13) CHECK(psi.eval(s, 1) * psi.eval(s, 1) <= c_psi * v * (1 + 1e-9));
    }
}

TEST_CASE("chi profile: plateau value one, smooth monotone decay") {
    const auto& chi = CutoffProfile::chi();
    CHECK(chi.eval(0.5, 0) == 1.0);
    CHECK(chi.eval(1.0, 0) == Catch::Approx(1.0));
    CHECK(chi.eval(2.0, 0) == 0.0);
    double prev = 1.0;
    for (int i = 1; i <= 2000; ++i) {
        const double s = 2.0 * i / 2000.0;
        const double v = chi.eval(s, 0);
        CHECK(v <= prev + 1e-12);
        CHECK(v >= -1e-13);
        prev = v;
    }
}

TEST_CASE("scaled cutoffs follow the scaling relations") {
    const auto psi_r = CutoffSpec::psi(5.0);
    // plateau: psi_R = r^2/2, grad = r, laplacian = N
    CHECK(psi_r.value(3.0) == Catch::Approx(4.5));
    CHECK(psi_r.d1(3.0) == Catch::Approx(3.0));
    CHECK(psi_r.laplacian(3.0, 3) == Catch::Approx(3.0));
    CHECK(psi_r.bilaplacian(3.0, 3) == 0.0);
    CHECK(psi_r.value(20.0) == 0.0);

    const auto chi_r = CutoffSpec::chi(4.0);
    CHECK(chi_r.value(2.0) == 1.0);
    CHECK(chi_r.value(9.0) == 0.0);
    CHECK(chi_r.laplacian(2.0, 3) == 0.0);

    // bilaplacian sanity against a finite-difference Laplacian-of-Laplacian
    auto lap = [&](double r) { return psi_r.laplacian(r, 3); };
    const double r0 = 11.0, h = 1e-4;
    const double lap_of_lap = (lap(r0 + h) - 2 * lap(r0) + lap(r0 - h)) / (h * h) +
                              (2.0 / r0) * (lap(r0 + h) - lap(r0 - h)) / (2 * h);
    CHECK(psi_r.bilaplacian(r0, 3) == Catch::Approx(lap_of_lap).epsilon(1e-5));
}
