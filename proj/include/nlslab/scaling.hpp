#pragma once

#include <cmath>
#include <vector>

#include "nlslab/errors.hpp"
#include "nlslab/field.hpp"
#include "nlslab/interp.hpp"
#include "nlslab/norms.hpp"

namespace nlslab {

/// The scaling symmetry (S_lambda u)(r) = lambda^{2/(p-1)} u(lambda r).
struct ScalingAction {
    double lambda = 1.0;
    explicit ScalingAction(double l) : lambda(l) {
        if (!(l > 0)) throw OutOfRange("ScalingAction: lambda must be > 0");
    }
    ScalingAction compose(const ScalingAction& other) const {
        return ScalingAction(lambda * other.lambda);
    }
};

/// Rescale onto a target grid by monotone cubic interpolation of the source.
/// Every target evaluation point lambda*r must stay inside the source domain.
inline RadialField rescale(const RadialField& u, const ScalingAction& a, GridPtr target) {
    const double lam = a.lambda;
    const auto& rt = target->radii();
    if (lam * rt.back() > u.grid().r_max() * (1 + 1e-12))
        throw DomainExceeded("rescale: lambda * r_max(target) exceeds the source domain");
    if (lam == 1.0 && target.get() == u.grid_ptr().get()) return u;  // bitwise identity

    const auto& rs = u.grid().radii();
    std::vector<double> re(u.size()), im(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
        re[j] = u.values()[j].real();
        im[j] = u.values()[j].imag();
    }
    Pchip pre(rs, re), pim(rs, im);
    const double amp = std::pow(lam, 2.0 / (u.params().p - 1.0));
    std::vector<cdouble> v(rt.size());
    for (std::size_t j = 0; j < rt.size(); ++j)
        v[j] = amp * cdouble(pre(lam * rt[j]), pim(lam * rt[j]));
    return RadialField(std::move(target), std::move(v), u.params());
}

inline RadialField rescale(const RadialField& u, const ScalingAction& a) {
    return rescale(u, a, u.grid_ptr());
}

/// Node-exact rescaling: the target grid is the source grid divided by
/// lambda, so values transfer without interpolation.
inline RadialField rescale_exact(const RadialField& u, double lambda) {
    if (!(lambda > 0)) throw OutOfRange("rescale_exact: lambda must be > 0");
    const double amp = std::pow(lambda, 2.0 / (u.params().p - 1.0));
    std::vector<cdouble> v(u.values());
    for (auto& x : v) x *= amp;
    return RadialField(u.grid().scaled(1.0 / lambda), std::move(v), u.params());
}

/// lambda_u = |grad u|_{L^2}^{-1/(1-s_c)}; rescaling by it yields unit
/// gradient norm.
inline double lambda_of(const RadialField& u) {
    const double g = gradient_norm(u);
    if (!(g > 1e-300)) throw ZeroField("lambda_of: gradient norm underflows");
    return std::pow(1.0 / g, 1.0 / (1.0 - u.params().s_c));
}

}  // namespace nlslab
