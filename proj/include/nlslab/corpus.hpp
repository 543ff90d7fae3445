#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nlslab/cutoffs.hpp"
#include "nlslab/field.hpp"
#include "nlslab/grid.hpp"
#include "nlslab/params.hpp"

namespace nlslab {

/// Smooth ramp from 0 (t <= 0) to 1 (t >= 1) with three vanishing
/// derivatives at both ends.
inline double smoothstep7(double t) {
    if (t <= 0) return 0.0;
    if (t >= 1) return 1.0;
    const double t4 = t * t * t * t;
    return t4 * (35.0 - 84.0 * t + 70.0 * t * t - 20.0 * t * t * t);
}

struct CorpusSpec {
    std::uint64_t seed = 20240301;
    std::size_t count = 500;
    std::size_t grid_points = 2048;
    double r_max = 32.0;

    std::string id() const {
        return "corpus-seed" + std::to_string(seed) + "-n" + std::to_string(count);
    }
};

/// Calibration corpus: Gaussians, multi-ring bumps with optional radial
/// chirp, slowly decaying powers r^{-a} with smooth truncations, and
/// superpositions. Deterministic for a fixed seed.
inline std::vector<RadialField> make_corpus(const Params& params, const CorpusSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto grid = RadialGrid::uniform(spec.r_max, spec.grid_points);

    auto gaussian_part = [&](double r, double amp, double width, double center) {
        const double z = (r - center) / width;
        return amp * std::exp(-z * z);
    };
    auto power_part = [&](double r, double amp, double a, double r_on, double r_off) {
        if (r <= 0.5 * r_on) return 0.0;
        const double on = smoothstep7(2.0 * (r - 0.5 * r_on) / r_on);
        const double off = 1.0 - smoothstep7((r - r_off) / (0.3 * r_off));
        return amp * std::pow(std::max(r, 1e-12), -a) * on * off;
    };

    std::vector<RadialField> out;
    out.reserve(spec.count);
    const double a_lo = 2.0 / (params.p - 1.0);
    const double a_hi = 0.5 * params.N;
    for (std::size_t i = 0; i < spec.count; ++i) {
        const int family = int(i % 4);
        const double amp = 0.3 + 2.7 * unit(rng);
        const double chirp = (family % 2 == 0) ? 0.0 : (2.0 * unit(rng) - 1.0);
        const double phase = 2.0 * M_PI * unit(rng);

        std::vector<std::array<double, 3>> rings;  // amp, width, center
        const int nrings = 1 + int(unit(rng) * 3.0);
        for (int k = 0; k < nrings; ++k)
            rings.push_back({0.2 + 1.8 * unit(rng), 0.3 + 1.7 * unit(rng),
                             unit(rng) * spec.r_max / 4.0});
        const double a_pow = a_lo + (a_hi - a_lo) * unit(rng);
        const double r_on = 0.5 + 1.5 * unit(rng);
        const double r_off = spec.r_max * (0.35 + 0.15 * unit(rng));

        out.push_back(RadialField::sample(grid, params, [&](double r) {
            double mod = 0.0;
            switch (family) {
                case 0:  // centered gaussian
                    mod = gaussian_part(r, amp, 0.3 + 2.7 * rings[0][1] / 2.0, 0.0);
                    break;
                case 1:  // multi-ring bumps
                    for (const auto& k : rings) mod += gaussian_part(r, k[0], k[1], k[2]);
                    break;
                case 2:  // truncated power
                    mod = power_part(r, amp, a_pow, r_on, r_off);
                    break;
                default:  // superposition
                    mod = gaussian_part(r, amp, 1.0 + rings[0][1], 0.0) +
                          power_part(r, 0.5 * amp, a_pow, r_on, r_off);
                    for (const auto& k : rings) mod += 0.5 * gaussian_part(r, k[0], k[1], k[2]);
            }
            return std::polar(1.0, phase + chirp * r * r) * mod;
        }));
    }
    return out;
}

}  // namespace nlslab
