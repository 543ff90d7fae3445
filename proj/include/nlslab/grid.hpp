#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "nlslab/errors.hpp"

namespace nlslab {

enum class GridMode { Uniform, LogUniform };

inline std::string to_string(GridMode m) {
    return m == GridMode::Uniform ? "uniform" : "log-uniform";
}

inline GridMode grid_mode_from_string(const std::string& s) {
    if (s == "uniform") return GridMode::Uniform;
    if (s == "log-uniform" || s == "log") return GridMode::LogUniform;
    throw ConfigError("unknown grid mode '" + s + "'");
}

/// Radial sample points, r_0 = 0 < r_1 < ... < r_{M-1} = r_max.
///
/// The log-uniform mode keeps the first interior radius and the stretch
/// ratio so quadrature weights are reproducible from the header alone.
class RadialGrid {
public:
    static std::shared_ptr<const RadialGrid> uniform(double r_max, std::size_t m) {
        if (m < 2 || !(r_max > 0)) throw OutOfRange("RadialGrid::uniform: need M >= 2 and r_max > 0");
        std::vector<double> r(m);
        for (std::size_t j = 0; j < m; ++j) r[j] = r_max * double(j) / double(m - 1);
        r.back() = r_max;
        return std::shared_ptr<const RadialGrid>(
            new RadialGrid(std::move(r), GridMode::Uniform, 0.0, 0.0));
    }

    /// Geometric spacing from r_inner out to r_max, with r_0 = 0 prepended.
    static std::shared_ptr<const RadialGrid> log_uniform(double r_inner, double r_max,
                                                         std::size_t m) {
        if (m < 3 || !(r_inner > 0) || !(r_max > r_inner))
            throw OutOfRange("RadialGrid::log_uniform: need M >= 3 and 0 < r_inner < r_max");
        std::vector<double> r(m);
        r[0] = 0.0;
        const double q = std::pow(r_max / r_inner, 1.0 / double(m - 2));
        for (std::size_t j = 1; j < m; ++j)
            r[j] = r_inner * std::pow(q, double(j - 1));
        r.back() = r_max;
        return std::shared_ptr<const RadialGrid>(
            new RadialGrid(std::move(r), GridMode::LogUniform, r_inner, q));
    }

    static std::shared_ptr<const RadialGrid> from_radii(std::vector<double> r, GridMode mode,
                                                        double r_inner = 0, double ratio = 0) {
        if (r.size() < 2 || r.front() != 0.0)
            throw OutOfRange("RadialGrid::from_radii: first radius must be 0");
        for (std::size_t j = 1; j < r.size(); ++j)
            if (!(r[j] > r[j - 1])) throw OutOfRange("RadialGrid::from_radii: radii not increasing");
        return std::shared_ptr<const RadialGrid>(
            new RadialGrid(std::move(r), mode, r_inner, ratio));
    }

    /// The source grid divided by lambda; node-exact rescaling support.
    std::shared_ptr<const RadialGrid> scaled(double inv_lambda) const {
        std::vector<double> r(radii_);
        for (auto& x : r) x *= inv_lambda;
        return std::shared_ptr<const RadialGrid>(
            new RadialGrid(std::move(r), mode_, first_interior_ * inv_lambda, ratio_));
    }

    const std::vector<double>& radii() const { return radii_; }
    std::size_t size() const { return radii_.size(); }
    double r_max() const { return radii_.back(); }
    GridMode mode() const { return mode_; }
    double first_interior() const { return first_interior_; }
    double stretch_ratio() const { return ratio_; }

    /// Index of the last node <= r (clamped to [0, M-1]).
    std::size_t floor_index(double r) const {
        if (r <= 0) return 0;
        if (r >= radii_.back()) return radii_.size() - 1;
        auto it = std::upper_bound(radii_.begin(), radii_.end(), r);
        return std::size_t(it - radii_.begin()) - 1;
    }

private:
    RadialGrid(std::vector<double> r, GridMode mode, double first_interior, double ratio)
        : radii_(std::move(r)), mode_(mode), first_interior_(first_interior), ratio_(ratio) {}

    std::vector<double> radii_;
    GridMode mode_;
    double first_interior_;
    double ratio_;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

}  // namespace nlslab
