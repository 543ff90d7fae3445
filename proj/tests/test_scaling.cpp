#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "nlslab/corpus.hpp"
#include "nlslab/dynamics.hpp"
#include "nlslab/norms.hpp"
#include "nlslab/scaling.hpp"

using namespace nlslab;

namespace {
RadialField gaussian(std::size_t m, double r_max = 12.0) {
    return RadialField::sample(RadialGrid::uniform(r_max, m), derive_params(3, 3.0),
                               [](double r) { return std::exp(-0.5 * r * r); });
}
}  // namespace

TEST_CASE("lambda = 1 rescale onto the same grid is the identity") {
    const auto u = gaussian(512);
    const auto v = rescale(u, ScalingAction(1.0));
    for (std::size_t j = 0; j < u.size(); ++j) CHECK(v.values()[j] == u.values()[j]);
}

TEST_CASE("rescale refuses to leave the source domain") {
    const auto u = gaussian(512);
    CHECK_THROWS_AS(rescale(u, ScalingAction(2.0)), DomainExceeded);
    CHECK_THROWS_AS(ScalingAction(0.0), OutOfRange);
}

TEST_CASE("rescaling composes multiplicatively") {
    const auto u = gaussian(16384);
    auto quarter = RadialGrid::uniform(3.0, 16384);
    const auto twice = rescale(rescale(u, ScalingAction(2.0), RadialGrid::uniform(6.0, 16384)),
                               ScalingAction(2.0), quarter);
    const auto once = rescale(u, ScalingAction(4.0), quarter);
    double worst = 0.0;
    for (std::size_t j = 0; j < once.size(); ++j)
        worst = std::max(worst, std::abs(twice.values()[j] - once.values()[j]));
    CHECK(worst <= 1e-8);
}

TEST_CASE("lambda_of matches the closed form and normalizes the gradient") {
    const Params q = derive_params(3, 3.0);  // s_c = 1/2 => lambda = g^-2
    const auto u = gaussian(4096);
    const double g = gradient_norm(u);
    CHECK(lambda_of(u) == Catch::Approx(std::pow(g, -2.0)).epsilon(1e-12));

    // |grad u| = 16 => lambda = 16^-2 at s_c = 1/2 (pure formula check)
    const double lam = std::pow(1.0 / 16.0, 1.0 / (1.0 - q.s_c));
    CHECK(lam == Catch::Approx(1.0 / 256.0).epsilon(1e-15));

    // round-trip on a random bump field via the node-exact rescale
    CorpusSpec spec;
    spec.count = 4;
    spec.grid_points = 2048;
    spec.seed = 31;
    for (const auto& w : make_corpus(q, spec)) {
        const auto v = rescale_exact(w, lambda_of(w));
        CHECK(gradient_norm(v) == Catch::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("interpolated rescale also lands on unit gradient norm") {
    const auto u = gaussian(8192);
    const double lam = lambda_of(u);  // < 1: the rescaled domain expands
    const double target_rmax = u.grid().r_max() / lam;
    const auto v = rescale(u, ScalingAction(lam), RadialGrid::uniform(target_rmax, 8192));
    CHECK(gradient_norm(v) == Catch::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("energy scales as lambda^{2(1-s_c)}") {
    const auto u = gaussian(8192);
    const double lam = 2.0;
    const auto v = rescale(u, ScalingAction(lam), RadialGrid::uniform(6.0, 8192));
    const double expect = std::pow(lam, 2.0 * (1.0 - u.params().s_c));
    CHECK(energy(v) / energy(u) == Catch::Approx(expect).epsilon(1e-5));
}
