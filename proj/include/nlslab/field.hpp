#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "nlslab/errors.hpp"
#include "nlslab/grid.hpp"
#include "nlslab/params.hpp"

namespace nlslab {

using cdouble = std::complex<double>;

/// A complex radial function sampled on a radial grid. The field is its
/// radial section; every full-space integral carries the surface-measure
/// weight omega_N r^{N-1}. Immutable after construction.
class RadialField {
public:
    RadialField(GridPtr grid, std::vector<cdouble> values, Params params)
        : grid_(std::move(grid)), values_(std::move(values)), params_(params) {
        if (values_.size() != grid_->size())
            throw OutOfRange("RadialField: value count does not match grid");
        for (const auto& v : values_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw NonFinite("RadialField: non-finite sample");
    }

    template <class F>
    static RadialField sample(GridPtr grid, const Params& params, F&& f) {
        std::vector<cdouble> v(grid->size());
        const auto& r = grid->radii();
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = cdouble(f(r[j]));
        return RadialField(std::move(grid), std::move(v), params);
    }

    const RadialGrid& grid() const { return *grid_; }
    GridPtr grid_ptr() const { return grid_; }
    const std::vector<cdouble>& values() const { return values_; }
    const Params& params() const { return params_; }
    std::size_t size() const { return values_.size(); }

    RadialField conjugated() const {
        std::vector<cdouble> v(values_);
        for (auto& x : v) x = std::conj(x);
        return RadialField(grid_, std::move(v), params_);
    }

    RadialField with_values(std::vector<cdouble> v) const {
        return RadialField(grid_, std::move(v), params_);
    }

    /// |u(r_max)|, the boundary sample watched by the resolved-tail monitor.
    double boundary_abs() const { return std::abs(values_.back()); }

    bool tail_resolved(double floor = 1e-8) const { return boundary_abs() <= floor; }

    double max_abs() const {
        double m = 0;
        for (const auto& v : values_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    GridPtr grid_;
    std::vector<cdouble> values_;
    Params params_;
};

}  // namespace nlslab
