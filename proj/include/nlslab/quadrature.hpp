#pragma once

#include <cstddef>
#include <vector>

#include "nlslab/errors.hpp"
#include "nlslab/grid.hpp"

namespace nlslab {

/// Exact integrals of the piecewise-linear interpolant of a sampled density.
///
/// Full-range sums reduce to the composite trapezoid rule; sub-range queries
/// split end cells exactly, so [a,b] + [b,c] = [a,c] holds to rounding for
/// any split point, grid-aligned or not.
class RangeIntegrator {
public:
    RangeIntegrator(GridPtr grid, std::vector<double> density)
        : grid_(std::move(grid)), f_(std::move(density)), prefix_(f_.size(), 0.0) {
        if (f_.size() != grid_->size())
            throw OutOfRange("RangeIntegrator: density size mismatch");
        const auto& r = grid_->radii();
        for (std::size_t j = 0; j + 1 < f_.size(); ++j)
            prefix_[j + 1] = prefix_[j] + 0.5 * (f_[j] + f_[j + 1]) * (r[j + 1] - r[j]);
    }

    double total() const { return prefix_.back(); }

    double between(double a, double b) const {
        const auto& r = grid_->radii();
        if (b < a) throw OutOfRange("RangeIntegrator: reversed range");
        a = std::max(a, r.front());
        b = std::min(b, r.back());
        if (b <= a) return 0.0;
        const std::size_t ia = grid_->floor_index(a);
        const std::size_t ib = grid_->floor_index(b);
        if (ia == ib) {
            // both ends inside one cell: integrate the linear interpolant
            return 0.5 * (value_at(a, ia) + value_at(b, ia)) * (b - a);
        }
        double s = prefix_[ib] - prefix_[ia + 1];
        s += 0.5 * (value_at(a, ia) + f_[ia + 1]) * (r[ia + 1] - a);
        if (b > r[ib]) s += 0.5 * (f_[ib] + value_at(b, ib)) * (b - r[ib]);
        return s;
    }

    double to(double b) const { return between(grid_->radii().front(), b); }

private:
    double value_at(double x, std::size_t cell) const {
        const auto& r = grid_->radii();
        if (cell + 1 >= r.size()) return f_.back();
        const double t = (x - r[cell]) / (r[cell + 1] - r[cell]);
        return f_[cell] + t * (f_[cell + 1] - f_[cell]);
    }

    GridPtr grid_;
    std::vector<double> f_;
    std::vector<double> prefix_;
};

}  // namespace nlslab
