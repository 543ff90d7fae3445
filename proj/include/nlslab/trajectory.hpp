#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nlslab/cutoffs.hpp"
#include "nlslab/dynamics.hpp"
#include "nlslab/field.hpp"
#include "nlslab/norms.hpp"
#include "nlslab/rho.hpp"

namespace nlslab {

/// What gets recorded along a run and how often the heavy pieces go in.
struct DiagnosticsConfig {
    std::vector<double> chi_scales{0.5, 1.0, 2.0, 4.0, 8.0};
    std::vector<double> psi_scales{0.5, 1.0, 2.0, 4.0, 8.0};
    double ladder_r_lo = 0;  // 0: start at the first interior node
    double kappa = kRhoLadderRatio;
    int heavy_every = 16;        // mass-ladder cadence, in records
    double boundary_floor = 1e-8;
    double tol_energy = 1e-6;    // drift allowance relative to max(|E0|, G0)
    bool record_anchors = true;  // snapshot fields where lambda crosses e^{-k/2}
    std::size_t max_anchors = 64;
};

/// Time series attached to one cutoff scale.
struct CutoffSeries {
    double scale = 0;
    std::vector<double> mass;        // \int cut |u|^2
    std::vector<double> momentum;    // Im \int grad(cut).grad(u) conj(u)
    std::vector<double> virial_rhs;  // psi only: assembled virial right side
};

struct ReliabilityFlags {
    bool tail = true;    // boundary sample below the floor
    bool energy = true;  // drift within tolerance
    bool focus = true;   // lambda spans >= 4 grid cells
    bool ok() const { return tail && energy && focus; }
};

/// Diagnostics along a simulation: dense scalar series every record, ring
/// ladders at a sparser cadence, and field snapshots at the anchor ladder
/// where lambda crosses e^{-k/2}.
struct TrajectoryRecord {
    Params params;
    GridPtr grid;

    std::vector<double> times;
    std::vector<double> grad_sq, l2, lp1, lpc, energies, lambdas, max_abs, boundary, discrete_mass;
    std::vector<ReliabilityFlags> flags;
    std::vector<CutoffSeries> chi_series, psi_series;

    std::vector<std::size_t> heavy_index;  // positions of ladder records in times
    std::vector<MassLadder> ladders;

    std::vector<double> anchor_times;
    std::vector<RadialField> anchor_fields;

    double energy0 = 0, grad_sq0 = 0;
    std::size_t reliable_end = 0;  // one past the last record with all flags ok
    double dt_median = 0;
    std::string stop_reason;

    std::size_t size() const { return times.size(); }

    std::size_t nearest_index(double t) const {
        std::size_t best = 0;
        double d = 1e300;
        for (std::size_t k = 0; k < times.size(); ++k)
            if (std::abs(times[k] - t) < d) {
                d = std::abs(times[k] - t);
                best = k;
            }
        return best;
    }
};

namespace detail {

inline void record_cutoff_series(const RadialField& u, std::vector<CutoffSeries>& dst,
                                 const std::vector<double>& scales, CutoffKind kind) {
    if (dst.empty())
        for (double s : scales) dst.push_back(CutoffSeries{s, {}, {}, {}});
    for (auto& series : dst) {
        const CutoffSpec cut =
            kind == CutoffKind::Psi ? CutoffSpec::psi(series.scale) : CutoffSpec::chi(series.scale);
        series.mass.push_back(local_mass(u, cut));
        series.momentum.push_back(momentum(u, cut));
        if (kind == CutoffKind::Psi) series.virial_rhs.push_back(virial_rhs(u, cut));
    }
}

}  // namespace detail

/// Appends one record. The caller supplies the solver-side discrete mass so
/// conservation is tracked in the scheme's own inner product.
inline void record_state(TrajectoryRecord& traj, const DiagnosticsConfig& cfg, double t,
                         const RadialField& u, double solver_mass) {
    const bool first = traj.times.empty();
    traj.times.push_back(t);
    const double g2 = gradient_norm_sq(u);
    traj.grad_sq.push_back(g2);
    traj.l2.push_back(lebesgue_norm(u, 2.0));
    traj.lp1.push_back(lebesgue_norm(u, u.params().p + 1.0));
    traj.lpc.push_back(lebesgue_norm(u, u.params().p_c));
    traj.energies.push_back(energy(u));
    const double lam = g2 > 0 ? std::pow(g2, -0.5 / (1.0 - u.params().s_c)) : 1e300;
    traj.lambdas.push_back(lam);
    traj.max_abs.push_back(u.max_abs());
    traj.boundary.push_back(u.boundary_abs());
    traj.discrete_mass.push_back(solver_mass);

    if (first) {
        traj.energy0 = traj.energies.front();
        traj.grad_sq0 = g2;
        traj.params = u.params();
        traj.grid = u.grid_ptr();
    }

    ReliabilityFlags fl;
    fl.tail = u.boundary_abs() <= cfg.boundary_floor;
    fl.energy = std::abs(traj.energies.back() - traj.energy0) <=
                cfg.tol_energy * std::max(std::abs(traj.energy0), traj.grad_sq0);
    fl.focus = u.grid().floor_index(lam) >= 4;
    traj.flags.push_back(fl);

    detail::record_cutoff_series(u, traj.chi_series, cfg.chi_scales, CutoffKind::Chi);
    detail::record_cutoff_series(u, traj.psi_series, cfg.psi_scales, CutoffKind::Psi);

    const std::size_t idx = traj.times.size() - 1;
    if (cfg.heavy_every > 0 && idx % std::size_t(cfg.heavy_every) == 0) {
        MassLadder ladder;
        ladder.kappa = cfg.kappa;
        const double r_lo = cfg.ladder_r_lo > 0
                                ? cfg.ladder_r_lo
                                : std::max(u.grid().radii()[1], u.grid().r_max() * 1e-12);
        ladder.radii = MassLadder::make_radii(r_lo, u.grid().r_max(), cfg.kappa);
        const auto mass = power_integrator(u, 2.0);
        const auto& r = u.grid().radii();
        const auto dens = power_density(u, 2.0);
        const auto& chi = CutoffProfile::chi();
        for (double rung : ladder.radii) {
            ladder.ball_mass.push_back(mass.to(rung));
            // smooth ball: plateau mass plus the bridge integral on [rung, 2 rung]
            double bridge = 0;
            std::size_t j = u.grid().floor_index(rung);
            double prev_r = rung, prev_f = 0;
            {
                // density interpolated at the plateau edge
                const std::size_t jj = std::min(j + 1, r.size() - 1);
                const double t1 = jj == j ? 0.0 : (rung - r[j]) / (r[jj] - r[j]);
                prev_f = dens[j] + t1 * (dens[jj] - dens[j]);
            }
            for (std::size_t k = j + 1; k < r.size() && r[k] < 2.0 * rung; ++k) {
                const double f = chi.eval(r[k] / rung, 0) * dens[k];
                bridge += 0.5 * (prev_f + f) * (r[k] - prev_r);
                prev_r = r[k];
                prev_f = f;
            }
            ladder.chi_mass.push_back(mass.to(rung) + bridge);
        }
        traj.heavy_index.push_back(idx);
        traj.ladders.push_back(std::move(ladder));
    }

    // update the reliability horizon: grows while every record is clean
    if (traj.reliable_end == idx && fl.ok()) traj.reliable_end = idx + 1;
}

/// Next anchor bookkeeping: snapshot when lambda first drops below
/// e^{-k/2} for a fresh integer k.
inline void maybe_record_anchor(TrajectoryRecord& traj, const DiagnosticsConfig& cfg, double t,
                                const RadialField& u, int& next_k) {
    if (!cfg.record_anchors || traj.anchor_fields.size() >= cfg.max_anchors) return;
    const double lam = traj.lambdas.empty() ? 1.0 : traj.lambdas.back();
    if (next_k == INT32_MIN) next_k = int(std::ceil(-2.0 * std::log(lam))) + 1;
    while (lam <= std::exp(-0.5 * next_k) && traj.anchor_fields.size() < cfg.max_anchors) {
        traj.anchor_times.push_back(t);
        traj.anchor_fields.push_back(u);
        ++next_k;
    }
}

}  // namespace nlslab
