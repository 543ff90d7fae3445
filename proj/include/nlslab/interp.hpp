#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "nlslab/errors.hpp"

namespace nlslab {

/// Monotone cubic (Fritsch-Carlson) interpolation of a real sequence.
/// No overshoot near sharp gradients, which matters when rescaling fields
/// close to blow-up: overshoot fabricates mass.
class Pchip {
public:
    Pchip(const std::vector<double>& x, const std::vector<double>& y) : x_(x), y_(y) {
        const std::size_t n = x.size();
        if (n < 2 || y.size() != n) throw OutOfRange("Pchip: need >= 2 nodes");
        m_.assign(n, 0.0);
        std::vector<double> h(n - 1), d(n - 1);
        for (std::size_t j = 0; j + 1 < n; ++j) {
            h[j] = x[j + 1] - x[j];
            d[j] = (y[j + 1] - y[j]) / h[j];
        }
        if (n == 2) {
            m_[0] = m_[1] = d[0];
        } else {
            for (std::size_t j = 1; j + 1 < n; ++j) {
                if (d[j - 1] == 0.0 || d[j] == 0.0 || (d[j - 1] > 0) != (d[j] > 0)) {
                    m_[j] = 0.0;
                } else {
                    const double w1 = 2.0 * h[j] + h[j - 1];
                    const double w2 = h[j] + 2.0 * h[j - 1];
                    m_[j] = (w1 + w2) / (w1 / d[j - 1] + w2 / d[j]);
                }
            }
            m_[0] = edge(h[0], h[1], d[0], d[1]);
            m_[n - 1] = edge(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
        }
    }

    double operator()(double x) const {
        const std::size_t n = x_.size();
        if (x < x_.front() - 1e-12 * (x_.back() - x_.front()) || x > x_.back() * (1 + 1e-12))
            throw DomainExceeded("Pchip: evaluation outside data range");
        x = std::min(std::max(x, x_.front()), x_.back());
        std::size_t lo = 0, hi = n - 1;
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            (x_[mid] <= x ? lo : hi) = mid;
        }
        const double h = x_[lo + 1] - x_[lo];
        const double t = (x - x_[lo]) / h;
        const double t2 = t * t, t3 = t2 * t;
        return y_[lo] * (2 * t3 - 3 * t2 + 1) + m_[lo] * h * (t3 - 2 * t2 + t) +
               y_[lo + 1] * (-2 * t3 + 3 * t2) + m_[lo + 1] * h * (t3 - t2);
    }

private:
    // Shape-preserving one-sided 3-point slope at an endpoint.
    static double edge(double h0, double h1, double d0, double d1) {
        double m = ((2 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (m * d0 <= 0)
            m = 0.0;
        else if ((d0 > 0) != (d1 > 0) && std::abs(m) > 3 * std::abs(d0))
            m = 3 * d0;
        return m;
    }

    std::vector<double> x_, y_, m_;
};

}  // namespace nlslab
