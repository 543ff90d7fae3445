#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "nlslab/corpus.hpp"
#include "nlslab/norms.hpp"
#include "nlslab/sobolev.hpp"

using namespace nlslab;

namespace {
RadialField unit_gaussian(int n = 3, std::size_t m = 4096, double r_max = 12.0) {
    const Params q = derive_params(n, n == 3 ? 3.0 : 2.5);
    return RadialField::sample(RadialGrid::uniform(r_max, m), q,
                               [](double r) { return std::exp(-0.5 * r * r); });
}
}  // namespace

TEST_CASE("H^{1/2} of the gaussian matches the closed-form transform") {
    // Under the unitary convention the gaussian is its own transform, so
    // |u|_{H^{1/2}}^2 = omega_3 \int xi^3 e^{-xi^2} dxi = 4 pi * 1/2 = 2 pi.
    const auto u = unit_gaussian();
    CHECK(sobolev_norm(u, 0.5) == Catch::Approx(std::sqrt(2.0 * M_PI)).epsilon(1e-6));
    CHECK(sobolev_critical_norm(u) == Catch::Approx(std::sqrt(2.0 * M_PI)).epsilon(1e-6));
}

TEST_CASE("s = 0 recovers the L2 norm (Plancherel)") {
    const auto u = unit_gaussian();
    CHECK(sobolev_norm(u, 0.0) == Catch::Approx(lebesgue_norm(u, 2.0)).epsilon(1e-4));
}

TEST_CASE("s = 1 recovers the gradient norm") {
    const auto u = unit_gaussian();
    CHECK(sobolev_norm(u, 1.0) == Catch::Approx(gradient_norm(u)).epsilon(1e-4));
}

TEST_CASE("Fourier-Bessel path agrees in even dimension") {
    const auto u = unit_gaussian(4, 2048, 12.0);
    CHECK(sobolev_norm(u, 0.0) == Catch::Approx(lebesgue_norm(u, 2.0)).epsilon(1e-4));
    CHECK(sobolev_norm(u, 1.0) == Catch::Approx(gradient_norm(u)).epsilon(1e-4));

    SobolevOptions opt;
    opt.allow_hankel = false;
    CHECK_THROWS_AS(sobolev_norm(u, 0.5, opt), UnsupportedDimension);
}

TEST_CASE("interpolation inequality between L2 and H^1 on the corpus") {
    const Params q = derive_params(3, 3.0);
    CorpusSpec spec;
    spec.count = 12;
    spec.grid_points = 2048;
    spec.r_max = 24.0;
    spec.seed = 5150;
    for (const auto& u : make_corpus(q, spec)) {
        const double hs = sobolev_critical_norm(u);
        const double bound = std::pow(lebesgue_norm(u, 2.0), 1.0 - q.s_c) *
                             std::pow(gradient_norm(u), q.s_c);
        CHECK(hs <= bound * (1.0 + 1e-3));
    }
}
