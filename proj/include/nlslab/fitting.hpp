#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "nlslab/errors.hpp"
#include "nlslab/trajectory.hpp"

namespace nlslab {

/// Ordinary least squares y = a + b x with slope standard error.
struct LineFit {
    double intercept = 0;
    double slope = 0;
    double slope_se = 0;
    double rms_residual = 0;
};

inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 3 || y.size() != n) throw OutOfRange("fit_line: need >= 3 points");
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0) throw OutOfRange("fit_line: degenerate abscissae");
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = y[i] - (f.intercept + f.slope * x[i]);
        ss += e * e;
    }
    f.rms_residual = std::sqrt(ss / n);
    f.slope_se = std::sqrt(ss / double(n - 2) / sxx);
    return f;
}

/// Blow-up time extrapolation: lambda^2(t) ~ 2b (T - t) fitted linearly on
/// a window where lambda contracted by >= 4x, then a log-log fit giving the
/// measured exponent alpha in lambda ~ (T - t)^alpha.
struct BlowupEstimate {
    double t_est = 0;
    double b = 0;               // rate parameter from the linear lambda^2 fit
    double fit_exponent = 0;    // alpha from the secondary log-log fit
    double fit_residual = 0;    // rms of the linear fit, relative
    double window_begin = 0;
    double window_end = 0;
    std::size_t samples = 0;
};

inline BlowupEstimate estimate_blowup_time(const std::vector<double>& times,
                                           const std::vector<double>& lambdas) {
    if (times.size() != lambdas.size() || times.size() < 20)
        throw InsufficientDecade("estimate_blowup_time: too few samples");
    const double lam_end = lambdas.back();
    // window: trailing run where lambda sits within 4x of its final value
    std::size_t begin = times.size();
    while (begin > 0 && lambdas[begin - 1] <= 4.0 * lam_end) --begin;
    const std::size_t n = times.size() - begin;
    if (n < 20 || !(lambdas[begin] >= 3.5 * lam_end))
        throw InsufficientDecade("estimate_blowup_time: lambda did not contract by 4x over a "
                                 "20-sample window");

    std::vector<double> x(times.begin() + begin, times.end());
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = lambdas[begin + i] * lambdas[begin + i];
    const LineFit lin = fit_line(x, y);  // y = a + slope t, slope = -2b
    if (!(lin.slope < 0))
        throw InsufficientDecade("estimate_blowup_time: lambda^2 is not decreasing");

    BlowupEstimate est;
    est.b = -0.5 * lin.slope;
    est.t_est = -lin.intercept / lin.slope;
    double scale = 0;
    for (double v : y) scale = std::max(scale, std::abs(v));
    est.fit_residual = lin.rms_residual / std::max(scale, 1e-300);
    est.window_begin = x.front();
    est.window_end = x.back();
    est.samples = n;

    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < n; ++i) {
        const double rem = est.t_est - x[i];
        if (rem <= 0) continue;
        lx.push_back(std::log(rem));
        ly.push_back(std::log(lambdas[begin + i]));
    }
    est.fit_exponent = fit_line(lx, ly).slope;
    return est;
}

inline BlowupEstimate estimate_blowup_time(const TrajectoryRecord& traj) {
    const std::size_t end = traj.reliable_end > 0 ? traj.reliable_end : traj.size();
    return estimate_blowup_time(
        std::vector<double>(traj.times.begin(), traj.times.begin() + end),
        std::vector<double>(traj.lambdas.begin(), traj.lambdas.begin() + end));
}

/// Fit v(t) = c |log(T - t)|^gamma by regressing log v on log |log(T - t)|.
struct GrowthFit {
    double gamma = 0;
    double gamma_se = 0;
    double amplitude = 0;
    double rms_residual = 0;
    bool growth_at_95 = false;  // gamma - 1.96 se > 0
};

inline GrowthFit fit_log_power_growth(const std::vector<double>& times,
                                      const std::vector<double>& values, double t_blowup) {
    std::vector<double> x, y;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double rem = t_blowup - times[i];
        if (rem <= 0 || values[i] <= 0) continue;
        const double l = std::abs(std::log(rem));
        if (l <= 1e-12) continue;
        x.push_back(std::log(l));
        y.push_back(std::log(values[i]));
    }
    const LineFit lin = fit_line(x, y);
    GrowthFit g;
    g.gamma = lin.slope;
    g.gamma_se = lin.slope_se;
    g.amplitude = std::exp(lin.intercept);
    g.rms_residual = lin.rms_residual;
    g.growth_at_95 = lin.slope - 1.96 * lin.slope_se > 0;
    return g;
}

}  // namespace nlslab
