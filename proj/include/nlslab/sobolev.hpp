#pragma once

#include <cmath>
#include <vector>

#include "nlslab/errors.hpp"
#include "nlslab/field.hpp"
#include "nlslab/quadrature.hpp"

namespace nlslab {

/// Frequency-grid controls for the fractional Sobolev norm. The xi range
/// grows adaptively (fixed spacing) until the outer octave carries a
/// negligible share of the integral.
struct SobolevOptions {
    double xi_max_init = 16.0;
    double xi_max_cap = 256.0;
    double dxi = 16.0 / 4096.0;
    double tail_fraction = 1e-9;
    bool allow_hankel = true;  // Fourier-Bessel path for even dimensions
};

namespace detail {

/// Radial Fourier transform under the unitary convention
/// u^(xi) = (2 pi)^{-N/2} \int u e^{-i x.xi} dx, so Plancherel is
/// constant-free. For N = 3 this is a sine transform of r u(r); other
/// dimensions go through the Bessel kernel of order N/2 - 1.
inline cdouble radial_fourier(const RadialField& u, const std::vector<double>& rw, double xi) {
    const auto& r = u.grid().radii();
    const auto& v = u.values();
    const int n = u.params().N;
    cdouble acc(0, 0);
    if (n == 3) {
        for (std::size_t j = 1; j < v.size(); ++j) acc += v[j] * (rw[j] * std::sin(xi * r[j]));
        return acc * (std::sqrt(2.0 / M_PI) / xi);
    }
    const double nu = 0.5 * n - 1.0;
    for (std::size_t j = 1; j < v.size(); ++j)
        acc += v[j] * (rw[j] * std::cyl_bessel_j(nu, xi * r[j]));
    return acc * std::pow(xi, -nu);
}

}  // namespace detail

/// |u|_{H^s}^2 = \int |xi|^{2s} |u^(xi)|^2 dxi by direct quadrature on a
/// xi grid. Diagnostic-grade: second order in both grids, adequate for the
/// cross-checks against L^2 (s = 0) and the gradient norm (s = 1).
inline double sobolev_norm_sq(const RadialField& u, double s,
                              const SobolevOptions& opt = SobolevOptions()) {
    const int n = u.params().N;
    if (n % 2 == 0 && !opt.allow_hankel)
        throw UnsupportedDimension("sobolev_norm_sq: even N requires the Fourier-Bessel path");

    // trapezoid weights in r, premultiplied by the kernel's radial factor
    const auto& r = u.grid().radii();
    std::vector<double> rw(r.size(), 0.0);
    for (std::size_t j = 0; j < r.size(); ++j) {
        const double wl = j == 0 ? 0.0 : 0.5 * (r[j] - r[j - 1]);
        const double wr = j + 1 == r.size() ? 0.0 : 0.5 * (r[j + 1] - r[j]);
        rw[j] = (wl + wr) * (n == 3 ? r[j] : std::pow(r[j], 0.5 * n));
    }

    const double wN = u.params().omega_n;
    const double expo = 2.0 * s + n - 1;
    double total = 0.0;
    double xi_lo = 0.0, xi_max = opt.xi_max_init;
    while (true) {
        double chunk = 0.0;
        double prev = 0.0;  // integrand vanishes at xi = 0 since expo > 0
        if (xi_lo > 0) {
            const cdouble f0 = detail::radial_fourier(u, rw, xi_lo);
            prev = std::pow(xi_lo, expo) * std::norm(f0);
        }
        const std::size_t k0 = std::size_t(std::lround(xi_lo / opt.dxi));
        const std::size_t k1 = std::size_t(std::lround(xi_max / opt.dxi));
        for (std::size_t k = k0 + 1; k <= k1; ++k) {
            const double xi = double(k) * opt.dxi;
            const cdouble f = detail::radial_fourier(u, rw, xi);
            const double val = std::pow(xi, expo) * std::norm(f);
            chunk += 0.5 * (prev + val) * opt.dxi;
            prev = val;
        }
        total += chunk;
        const bool converged =
            xi_lo > 0 ? (chunk <= opt.tail_fraction * std::max(total, 1e-300)) : false;
        if ((xi_lo > 0 && converged) || xi_max >= opt.xi_max_cap) break;
        if (xi_lo == 0 && total <= 0) break;  // zero field
        xi_lo = xi_max;
        xi_max = std::min(2.0 * xi_max, opt.xi_max_cap);
        if (xi_lo >= xi_max) break;
    }
    return wN * total;
}

inline double sobolev_norm(const RadialField& u, double s,
                           const SobolevOptions& opt = SobolevOptions()) {
    return std::sqrt(sobolev_norm_sq(u, s, opt));
}

/// The scale-critical norm |u|_{H^{s_c}}.
inline double sobolev_critical_norm(const RadialField& u,
                                    const SobolevOptions& opt = SobolevOptions()) {
    return sobolev_norm(u, u.params().s_c, opt);
}

}  // namespace nlslab
