#pragma once

#include <cmath>
#include <vector>

#include "nlslab/errors.hpp"
#include "nlslab/field.hpp"
#include "nlslab/quadrature.hpp"

namespace nlslab {

/// An annulus r_in <= |x| <= r_out. Sharp radii; integrals snap the bounds
/// into the grid cells with exact end-cell corrections.
struct Annulus {
    double r_in = 0;
    double r_out = 0;
    Annulus(double a, double b) : r_in(a), r_out(b) {
        if (!(r_out > r_in) || r_in < 0) throw OutOfRange("Annulus: need 0 <= r_in < r_out");
    }
};

/// Radial derivative by centered differences (3-point on nonuniform grids),
/// zero at the origin by radial regularity, one-sided at r_max.
inline std::vector<cdouble> radial_derivative(const RadialField& u) {
    const auto& r = u.grid().radii();
    const auto& v = u.values();
    const std::size_t m = v.size();
    std::vector<cdouble> g(m, cdouble(0, 0));
    for (std::size_t j = 1; j + 1 < m; ++j) {
        const double hm = r[j] - r[j - 1];
        const double hp = r[j + 1] - r[j];
        g[j] = (-hp / (hm * (hm + hp))) * v[j - 1] + ((hp - hm) / (hm * hp)) * v[j] +
               (hm / (hp * (hm + hp))) * v[j + 1];
    }
    if (m >= 2) g[m - 1] = (v[m - 1] - v[m - 2]) / (r[m - 1] - r[m - 2]);
    return g;  // g[0] = 0: du/dr(0) = 0 for radial fields
}

inline std::vector<double> radial_derivative_abs_sq(const RadialField& u) {
    auto d = radial_derivative(u);
    std::vector<double> g(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) g[j] = std::norm(d[j]);
    return g;
}

/// omega_N r^{N-1} |u|^q sampled on the grid.
inline std::vector<double> power_density(const RadialField& u, double q) {
    const auto& r = u.grid().radii();
    const auto& v = u.values();
    std::vector<double> f(v.size());
    const double w = u.params().omega_n;
    for (std::size_t j = 0; j < v.size(); ++j) {
        const double a = std::abs(v[j]);
        f[j] = w * std::pow(r[j], u.params().N - 1) * (a == 0.0 ? 0.0 : std::pow(a, q));
    }
    return f;
}

inline RangeIntegrator power_integrator(const RadialField& u, double q) {
    return RangeIntegrator(u.grid_ptr(), power_density(u, q));
}

inline RangeIntegrator gradient_integrator(const RadialField& u) {
    const auto& r = u.grid().radii();
    auto g = radial_derivative_abs_sq(u);
    const double w = u.params().omega_n;
    for (std::size_t j = 0; j < g.size(); ++j) g[j] *= w * std::pow(r[j], u.params().N - 1);
    return RangeIntegrator(u.grid_ptr(), std::move(g));
}

/// L^q norm over the whole domain.
inline double lebesgue_norm(const RadialField& u, double q) {
    if (!(q >= 1.0)) throw OutOfRange("lebesgue_norm: need q >= 1");
    const double s = power_integrator(u, q).total();
    return std::pow(s, 1.0 / q);
}

/// Integral of |grad u|^2 over the whole domain.
inline double gradient_norm_sq(const RadialField& u) {
    return gradient_integrator(u).total();
}

inline double gradient_norm(const RadialField& u) { return std::sqrt(gradient_norm_sq(u)); }

/// Integral of |u|^q over an annulus (q = 2 or p_c in practice).
inline double annulus_mass(const RadialField& u, const Annulus& a, double weight_exponent) {
    if (a.r_out > u.grid().r_max() * (1 + 1e-12))
        throw OutOfRange("annulus_mass: annulus leaves the grid domain");
    return power_integrator(u, weight_exponent).between(a.r_in, a.r_out);
}

/// Mass distribution function g(R) = R^{-2 s_c} * (ball mass up to R).
inline double mass_distribution(const RadialField& u, double R) {
    if (!(R > 0) || R > u.grid().r_max() * (1 + 1e-12))
        throw OutOfRange("mass_distribution: R outside (0, r_max]");
    return power_integrator(u, 2.0).to(R) / std::pow(R, 2.0 * u.params().s_c);
}

/// The volume-of-ball Hoelder constant bounding g(R) by |u|_{L^{p_c}}^2.
inline double mass_distribution_holder_constant(const Params& q) {
    return std::pow(q.omega_n / q.N, 1.0 - 2.0 / q.p_c);
}

}  // namespace nlslab
