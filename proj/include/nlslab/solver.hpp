#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "nlslab/errors.hpp"
#include "nlslab/field.hpp"
#include "nlslab/trajectory.hpp"

namespace nlslab {

struct StopCriteria {
    double amplification = 1e12;  // stop once |grad u| >= amp * |grad u0|
    double max_time = 1e300;      // physical time budget
    std::size_t max_steps = 200000000;
    double wall_clock_seconds = 1e9;
};

struct SolverConfig {
    double dt_init = 1e-3;   // also the absolute step cap
    double cfl = 0.5;        // controller prefactor
    double h2_const = 100.0; // accuracy cap dt <= cfl * h2_const * h^2
    double phase_cap = 0.1;  // dt <= cfl * phase_cap / |u|_inf^{p-1}
    double nonlinearity = 1.0;  // coupling; 0 turns the equation linear
    double fixed_dt = 0;        // > 0 disables the controller entirely
    int record_every = 4;
    StopCriteria stop;
    DiagnosticsConfig diag;
};

/// Strang-split integrator for i u_t = -Lap u - |u|^{p-1} u on the radial
/// grid: half-step exact nonlinear phase rotation, Crank-Nicolson for the
/// radial Laplacian (finite-volume form, self-adjoint in the cell-volume
/// inner product, hence exactly mass-conserving), half phase step again.
/// Dirichlet at r_max; the origin row is the regularized Laplacian
/// 2N (u_1 - u_0)/h^2 that the flux form produces on its own.
class Stepper {
public:
    Stepper(GridPtr grid, Params params, double nonlinearity = 1.0)
        : grid_(std::move(grid)), params_(params), coupling_(nonlinearity) {
        const auto& r = grid_->radii();
        const std::size_t m = r.size();
        vol_.resize(m - 1);
        face_.resize(m - 1);
        for (std::size_t j = 0; j + 1 < m; ++j) {
            const double rp = 0.5 * (r[j] + r[j + 1]);          // face j+1/2
            const double rm = j == 0 ? 0.0 : 0.5 * (r[j - 1] + r[j]);
            vol_[j] = (std::pow(rp, params.N) - std::pow(rm, params.N)) / params.N;
            face_[j] = std::pow(rp, params.N - 1) / (r[j + 1] - r[j]);
        }
        lower_.resize(m - 1);
        diag_.resize(m - 1);
        upper_.resize(m - 1);
        work_.resize(m - 1);
        rhs_.resize(m - 1);
    }

    const Params& params() const { return params_; }
    const RadialGrid& grid() const { return *grid_; }

    /// Discrete mass in the scheme's own inner product,
    /// omega_N sum vol_j |u_j|^2; conserved to rounding per step.
    double discrete_mass(const std::vector<cdouble>& u) const {
        double s = 0;
        for (std::size_t j = 0; j + 1 < u.size(); ++j) s += vol_[j] * std::norm(u[j]);
        return params_.omega_n * s;
    }

    void step_in_place(std::vector<cdouble>& u, double dt) const {
        phase_rotate(u, 0.5 * dt);
        crank_nicolson(u, dt);
        phase_rotate(u, 0.5 * dt);
        for (const auto& v : u)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw NonFinite("Stepper: state left the resolvable scale");
    }

    RadialField step(const RadialField& u, double dt) const {
        std::vector<cdouble> v(u.values());
        step_in_place(v, dt);
        return u.with_values(std::move(v));
    }

private:
    void phase_rotate(std::vector<cdouble>& u, double dt) const {
        if (coupling_ == 0.0) return;
        const double ex = 0.5 * (params_.p - 1.0);
        for (auto& v : u) {
            const double a2 = std::norm(v);
            if (a2 == 0.0) continue;
            v *= std::polar(1.0, coupling_ * dt * std::pow(a2, ex));
        }
    }

    // (I - i dt/2 L) u^+ = (I + i dt/2 L) u with L the flux-form Laplacian
    void crank_nicolson(std::vector<cdouble>& u, double dt) const {
        const std::size_t n = u.size() - 1;  // unknowns; u[n] = 0 (Dirichlet)
        const cdouble itheta(0.0, 0.5 * dt);
        for (std::size_t j = 0; j < n; ++j) {
            const double aw = j == 0 ? 0.0 : face_[j - 1] / vol_[j];
            const double ae = face_[j] / vol_[j];
            const cdouble lw = aw, le = (j + 1 < n) ? cdouble(ae) : cdouble(0.0);
            // row of L: lw u_{j-1} - (aw+ae) u_j + ae u_{j+1}
            lower_[j] = -itheta * lw;
            diag_[j] = 1.0 + itheta * (aw + ae);
            upper_[j] = -itheta * le;
            cdouble r = (1.0 - itheta * (aw + ae)) * u[j];
            if (j > 0) r += itheta * lw * u[j - 1];
            if (j + 1 < n) r += itheta * cdouble(ae) * u[j + 1];
            rhs_[j] = r;
        }
        // Thomas sweep (diagonally dominant in modulus, no pivoting needed)
        work_[0] = upper_[0] / diag_[0];
        rhs_[0] /= diag_[0];
        for (std::size_t j = 1; j < n; ++j) {
            const cdouble den = diag_[j] - lower_[j] * work_[j - 1];
            if (std::abs(den) < 1e-300) throw LinearSolveFailure("Stepper: singular pivot");
            work_[j] = upper_[j] / den;
            rhs_[j] = (rhs_[j] - lower_[j] * rhs_[j - 1]) / den;
        }
        for (std::size_t j = n - 1; j-- > 0;) rhs_[j] -= work_[j] * rhs_[j + 1];
        for (std::size_t j = 0; j < n; ++j) u[j] = rhs_[j];
        u[n] = cdouble(0.0, 0.0);
    }

    GridPtr grid_;
    Params params_;
    double coupling_;
    std::vector<double> vol_, face_;
    mutable std::vector<cdouble> lower_, diag_, upper_, work_, rhs_;
};

/// One public step at a caller-chosen dt.
inline RadialField step(const RadialField& u, double dt, double nonlinearity = 1.0) {
    return Stepper(u.grid_ptr(), u.params(), nonlinearity).step(u, dt);
}

inline double controller_dt(const SolverConfig& cfg, const Params& params, double h_ref,
                            double max_abs) {
    if (cfg.fixed_dt > 0) return cfg.fixed_dt;
    double dt = cfg.dt_init;
    dt = std::min(dt, cfg.cfl * cfg.h2_const * h_ref * h_ref);
    if (max_abs > 0 && cfg.nonlinearity != 0) {
        const double rate = std::pow(max_abs, params.p - 1.0);
        dt = std::min(dt, cfg.cfl * cfg.phase_cap / rate);
    }
    return dt;
}

struct RunResult {
    TrajectoryRecord trajectory;
    RadialField final_field;
    double final_time = 0;
    std::size_t steps = 0;
};

/// Integrates until a stop criterion fires. Always returns the partial
/// trajectory with the stop annotated; step failures are recorded, not
/// rethrown.
inline RunResult run(const RadialField& u0, const SolverConfig& cfg) {
    Stepper stepper(u0.grid_ptr(), u0.params(), cfg.nonlinearity);
    std::vector<cdouble> state(u0.values());
    const double h_ref = u0.grid().r_max() / double(u0.size() - 1);
    const double g0 = gradient_norm(u0);

    TrajectoryRecord traj;
    double t = 0;
    std::size_t steps = 0;
    int next_anchor_k = INT32_MIN;
    std::vector<double> dts;
    const auto wall_start = std::chrono::steady_clock::now();

    auto snapshot = [&]() { return u0.with_values(state); };
    {
        const auto u = snapshot();
        record_state(traj, cfg.diag, t, u, stepper.discrete_mass(state));
        maybe_record_anchor(traj, cfg.diag, t, u, next_anchor_k);
    }

    while (true) {
        if (steps >= cfg.stop.max_steps) {
            traj.stop_reason = "max-steps";
            break;
        }
        if (t >= cfg.stop.max_time) {
            traj.stop_reason = "max-time";
            break;
        }
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
        if (wall >= cfg.stop.wall_clock_seconds) {
            traj.stop_reason = "wall-clock";
            break;
        }

        double peak = 0;
        for (const auto& v : state) peak = std::max(peak, std::abs(v));
        const double dt = std::min(controller_dt(cfg, u0.params(), h_ref, peak),
                                   cfg.stop.max_time > t ? cfg.stop.max_time - t : 1e300);
        try {
            stepper.step_in_place(state, dt);
        } catch (const NonFinite&) {
            traj.stop_reason = "non-finite";
            break;
        } catch (const LinearSolveFailure&) {
            traj.stop_reason = "linear-solve-failure";
            break;
        }
        t += dt;
        ++steps;
        if (dts.size() < 4096) dts.push_back(dt);

        if (steps % std::size_t(std::max(cfg.record_every, 1)) == 0) {
            const auto u = snapshot();
            record_state(traj, cfg.diag, t, u, stepper.discrete_mass(state));
            maybe_record_anchor(traj, cfg.diag, t, u, next_anchor_k);

            const double g = std::sqrt(traj.grad_sq.back());
            if (g0 > 0 && g >= cfg.stop.amplification * g0) {
                traj.stop_reason = "amplification";
                break;
            }
            if (!traj.flags.back().focus) {
                traj.stop_reason = "focus-resolution";
                break;
            }
        }
    }

    if (!dts.empty()) {
        auto mid = dts;
        std::nth_element(mid.begin(), mid.begin() + mid.size() / 2, mid.end());
        traj.dt_median = mid[mid.size() / 2];
    }
    RunResult res{std::move(traj), u0.with_values(std::move(state)), t, steps};
    return res;
}

}  // namespace nlslab
