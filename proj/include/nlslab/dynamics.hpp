#pragma once

#include <cmath>
#include <vector>

#include "nlslab/cutoffs.hpp"
#include "nlslab/errors.hpp"
#include "nlslab/field.hpp"
#include "nlslab/norms.hpp"
#include "nlslab/scaling.hpp"

namespace nlslab {

/// Conserved energy E(u) = 1/2 |grad u|^2 - 1/(p+1) \int |u|^{p+1}.
inline double energy(const RadialField& u) {
    const double p = u.params().p;
    return 0.5 * gradient_norm_sq(u) - power_integrator(u, p + 1.0).total() / (p + 1.0);
}

/// \int chi_R |u|^2 (unweighted; callers apply lambda powers).
inline double local_mass(const RadialField& u, const CutoffSpec& c) {
    const auto& r = u.grid().radii();
    auto f = power_density(u, 2.0);
    for (std::size_t j = 0; j < f.size(); ++j) f[j] *= c.value(r[j]);
    return RangeIntegrator(u.grid_ptr(), std::move(f)).total();
}

/// Im \int grad(cut) . grad(u) conj(u), the momentum functional of the
/// localized virial identity, reduced to the radial line.
inline double momentum(const RadialField& u, const CutoffSpec& c) {
    const auto& r = u.grid().radii();
    const auto& v = u.values();
    const auto du = radial_derivative(u);
    const double wN = u.params().omega_n;
    const int n = u.params().N;
    std::vector<double> f(v.size(), 0.0);
    for (std::size_t j = 1; j < v.size(); ++j) {
        const double w = c.d1(r[j]);
        if (w == 0.0) continue;
        f[j] = wN * std::pow(r[j], n - 1) * w * std::imag(du[j] * std::conj(v[j]));
    }
    return RangeIntegrator(u.grid_ptr(), std::move(f)).total();
}

/// Right side of the localized virial identity
///   1/2 d/dtau Im \int grad(cut).grad(v) conj(v)
///     = \int cut''|grad v|^2 - 1/4 \int lap^2(cut) |v|^2
///       - (1/2 - 1/(p+1)) \int lap(cut) |v|^{p+1},
/// with cut'' read radially (valid for radial v).
inline double virial_rhs(const RadialField& u, const CutoffSpec& c) {
    const auto& r = u.grid().radii();
    const auto& v = u.values();
    const auto dsq = radial_derivative_abs_sq(u);
    const double wN = u.params().omega_n;
    const int n = u.params().N;
    const double p = u.params().p;
    const double nl_coeff = 0.5 - 1.0 / (p + 1.0);
    std::vector<double> f(v.size(), 0.0);
    for (std::size_t j = 0; j < v.size(); ++j) {
        const double rj = r[j];
        const double geom = wN * std::pow(rj, n - 1);
        const double a = std::abs(v[j]);
        const double usq = a * a;
        const double up1 = a == 0.0 ? 0.0 : std::pow(a, p + 1.0);
        f[j] = geom * (c.d2(rj) * dsq[j] - 0.25 * c.bilaplacian(rj, n) * usq -
                       nl_coeff * c.laplacian(rj, n) * up1);
    }
    return RangeIntegrator(u.grid_ptr(), std::move(f)).total();
}

/// Right side of the full-space virial identity
///   d^2/dt^2 \int |x|^2 |u|^2 = 4N(p-1) E - 16 s_c/(N - 2 s_c) |grad u|^2,
/// valid when u is supported where the psi cutoff is exactly quadratic.
inline double global_virial_rhs(const Params& q, double energy0, double grad_sq) {
    return 4.0 * q.N * (q.p - 1.0) * energy0 - 16.0 * q.s_c / (q.N - 2.0 * q.s_c) * grad_sq;
}

/// \int psi_R |u|^2; on the quadratic plateau this is half the variance
/// integral \int |x|^2 |u|^2.
inline double weighted_mass(const RadialField& u, const CutoffSpec& c) {
    return local_mass(u, c);
}

struct RenormalizedView {
    RadialField field;   // unit gradient norm, conjugated
    double lambda;       // renormalization scale of the input
    double focus_depth;  // N(t) = -log lambda
};

/// The tau = 0 slice of the time-reversed renormalization
/// v(tau, x) = lambda^{2/(p-1)} conj(u)(t - lambda^2 tau, lambda x):
/// conjugate, then rescale by lambda_u onto the node-exact scaled grid.
inline RenormalizedView renormalized_view(const RadialField& u) {
    const double lam = lambda_of(u);
    RadialField v = rescale_exact(u.conjugated(), lam);
    return RenormalizedView{std::move(v), lam, -std::log(lam)};
}

/// \int_0^{tau*} (tau* - tau) |grad v(tau)|^2 dtau over a recorded series,
/// by the trapezoid rule on the sampled times. Also reports the ratio
/// against tau*^{1+s_c} used by the dispersion bound tracking.
struct DispersiveIntegral {
    double value = 0;
    double ratio = 0;  // value / tau*^{1+s_c}
};

inline DispersiveIntegral dispersive_integral(const std::vector<double>& times,
                                              const std::vector<double>& grad_sq,
                                              double tau_star, double s_c) {
    if (times.size() != grad_sq.size() || times.size() < 2)
        throw OutOfRange("dispersive_integral: series size mismatch");
    if (tau_star > times.back() * (1 + 1e-12) || tau_star <= times.front())
        throw RangeExceeded("dispersive_integral: tau* outside the recorded range");
    double acc = 0;
    for (std::size_t k = 0; k + 1 < times.size() && times[k] < tau_star; ++k) {
        const double t1 = times[k];
        double t2 = times[k + 1];
        double g2 = grad_sq[k + 1];
        if (t2 > tau_star) {  // clip the last cell at tau*
            const double s = (tau_star - t1) / (t2 - t1);
            g2 = grad_sq[k] + s * (grad_sq[k + 1] - grad_sq[k]);
            t2 = tau_star;
        }
        const double f1 = (tau_star - t1) * grad_sq[k];
        const double f2 = (tau_star - t2) * g2;
        acc += 0.5 * (f1 + f2) * (t2 - t1);
    }
    return DispersiveIntegral{acc, acc / std::pow(tau_star, 1.0 + s_c)};
}

}  // namespace nlslab
