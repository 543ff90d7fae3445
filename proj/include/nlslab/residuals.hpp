#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "nlslab/dynamics.hpp"
#include "nlslab/errors.hpp"
#include "nlslab/trajectory.hpp"

namespace nlslab {

namespace detail {

/// 3-point derivative on a (mildly) nonuniform time grid.
inline double centered_dt(const std::vector<double>& t, const std::vector<double>& f,
                          std::size_t k) {
    const double hm = t[k] - t[k - 1];
    const double hp = t[k + 1] - t[k];
    return (-hp / (hm * (hm + hp))) * f[k - 1] + ((hp - hm) / (hm * hp)) * f[k] +
           (hm / (hp * (hm + hp))) * f[k + 1];
}

inline void check_sampling(const TrajectoryRecord& traj) {
    if (traj.size() < 5) throw InsufficientSampling("residual: fewer than 5 records");
    if (traj.dt_median > 0) {
        const double stride = (traj.times.back() - traj.times.front()) / double(traj.size() - 1);
        if (stride > 10.0 * traj.dt_median * 1.0001)
            throw InsufficientSampling("residual: record stride exceeds 10x the solver step");
    }
}

}  // namespace detail

/// Re-simulation hook used when a recorded trajectory is too coarse for
/// time differencing: returns the same run recorded at every step.
using ResimulateCallback = std::function<TrajectoryRecord()>;

/// Max normalized residual of the mass-flux identity
///   1/2 d/dtau \int cut |v|^2 = Im \int grad(cut).grad(v) conj(v)
/// over the reliable window, using centered differences on the recorded
/// series. Normalization is the largest |right side| on the window.
inline double flux_identity_residual(const TrajectoryRecord& traj_in, CutoffKind kind,
                                     std::size_t scale_index,
                                     const ResimulateCallback& resim = {}) {
    const TrajectoryRecord* traj = &traj_in;
    TrajectoryRecord dense;
    try {
        detail::check_sampling(*traj);
    } catch (const InsufficientSampling&) {
        if (!resim) throw;
        dense = resim();
        traj = &dense;
        detail::check_sampling(*traj);
    }
    const auto& series =
        kind == CutoffKind::Psi ? traj->psi_series.at(scale_index) : traj->chi_series.at(scale_index);
    const std::size_t end = traj->reliable_end > 0 ? traj->reliable_end : traj->size();
    double scale = 0;
    for (std::size_t k = 0; k < end; ++k) scale = std::max(scale, std::abs(series.momentum[k]));
    if (scale == 0) scale = 1e-300;
    double worst = 0;
    for (std::size_t k = 1; k + 1 < end; ++k) {
        const double lhs = 0.5 * detail::centered_dt(traj->times, series.mass, k);
        worst = std::max(worst, std::abs(lhs - series.momentum[k]));
    }
    return worst / scale;
}

/// Max normalized residual of the localized virial identity
///   1/2 d/dtau Im \int grad(cut).grad(v) conj(v) = assembled right side.
inline double virial_identity_residual(const TrajectoryRecord& traj_in, std::size_t scale_index,
                                       const ResimulateCallback& resim = {}) {
    const TrajectoryRecord* traj = &traj_in;
    TrajectoryRecord dense;
    try {
        detail::check_sampling(*traj);
    } catch (const InsufficientSampling&) {
        if (!resim) throw;
        dense = resim();
        traj = &dense;
        detail::check_sampling(*traj);
    }
    const auto& series = traj->psi_series.at(scale_index);
    const std::size_t end = traj->reliable_end > 0 ? traj->reliable_end : traj->size();
    double scale = 0;
    for (std::size_t k = 0; k < end; ++k) scale = std::max(scale, std::abs(series.virial_rhs[k]));
    if (scale == 0) scale = 1e-300;
    double worst = 0;
    for (std::size_t k = 1; k + 1 < end; ++k) {
        const double lhs = 0.5 * detail::centered_dt(traj->times, series.momentum, k);
        worst = std::max(worst, std::abs(lhs - series.virial_rhs[k]));
    }
    return worst / scale;
}

/// Residual of the full-space virial identity on a run whose support stays
/// inside the quadratic plateau of psi_R:
///   d^2/dt^2 \int |x|^2 |u|^2 = 4N(p-1) E0 - 16 s_c/(N-2s_c) |grad u|^2,
/// with the left side as 2 * (second time difference of \int psi_R |u|^2).
inline double global_virial_residual(const TrajectoryRecord& traj, std::size_t psi_index) {
    detail::check_sampling(traj);
    const auto& series = traj.psi_series.at(psi_index);
    const std::size_t end = traj.reliable_end > 0 ? traj.reliable_end : traj.size();
    const Params& q = traj.params;
    double scale = 0, worst = 0;
    std::vector<double> rhs(end);
    for (std::size_t k = 0; k < end; ++k) {
        rhs[k] = global_virial_rhs(q, traj.energy0, traj.grad_sq[k]);
        scale = std::max(scale, std::abs(rhs[k]));
    }
    if (scale == 0) scale = 1e-300;
    for (std::size_t k = 1; k + 1 < end; ++k) {
        const double hm = traj.times[k] - traj.times[k - 1];
        const double hp = traj.times[k + 1] - traj.times[k];
        const double second = 2.0 *
                              (series.mass[k - 1] * hp - series.mass[k] * (hm + hp) +
                               series.mass[k + 1] * hm) /
                              (hm * hp * (hm + hp));
        worst = std::max(worst, std::abs(2.0 * second - rhs[k]));
    }
    return worst / scale;
}

}  // namespace nlslab
