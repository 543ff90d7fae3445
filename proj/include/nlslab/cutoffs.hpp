#pragma once

#include <array>
#include <cmath>
#include <string>

#include "nlslab/errors.hpp"

namespace nlslab {

namespace detail {

/// Degree-7 two-point Hermite bridge on [a, b]: matches value and first
/// three derivatives at both ends, which keeps the bi-Laplacian of the
/// assembled cutoff continuous.
class SepticBridge {
public:
    SepticBridge() = default;
    SepticBridge(double a, double b, const std::array<double, 4>& left,
                 const std::array<double, 4>& right)
        : a_(a), h_(b - a) {
        // coefficients in t = (x - a)/h; derivative data scales by h^k
        c_[0] = left[0];
        c_[1] = left[1] * h_;
        c_[2] = left[2] * h_ * h_ / 2.0;
        c_[3] = left[3] * h_ * h_ * h_ / 6.0;
        // remaining 4 coefficients from the right-end conditions
        double mat[4][5];
        const double rhs[4] = {right[0], right[1] * h_, right[2] * h_ * h_,
                               right[3] * h_ * h_ * h_};
        for (int row = 0; row < 4; ++row) {
            double base = 0;  // contribution of c_[0..3] to derivative 'row' at t = 1
            for (int k = 0; k < 4; ++k) base += c_[k] * falling(k, row);
            for (int col = 0; col < 4; ++col) mat[row][col] = falling(col + 4, row);
            mat[row][4] = rhs[row] - base;
        }
        solve4(mat);
        for (int k = 0; k < 4; ++k) c_[k + 4] = mat[k][4];
    }

    double eval(double x, int deriv) const {
        const double t = (x - a_) / h_;
        double s = 0;
        for (int k = 7; k >= deriv; --k) s = s * t + c_[k] * falling(k, deriv);
        return s / std::pow(h_, deriv);
    }

private:
    static double falling(int k, int d) {
        double f = 1;
        for (int i = 0; i < d; ++i) f *= (k - i);
        return k >= d ? f : 0.0;
    }

    static void solve4(double m[4][5]) {
        for (int col = 0; col < 4; ++col) {
            int piv = col;
            for (int row = col + 1; row < 4; ++row)
                if (std::abs(m[row][col]) > std::abs(m[piv][col])) piv = row;
            for (int k = 0; k < 5; ++k) std::swap(m[col][k], m[piv][k]);
            for (int row = 0; row < 4; ++row) {
                if (row == col) continue;
                const double f = m[row][col] / m[col][col];
                for (int k = col; k < 5; ++k) m[row][k] -= f * m[col][k];
            }
        }
        for (int k = 0; k < 4; ++k) m[k][4] /= m[k][k];
    }

    double a_ = 0, h_ = 1;
    std::array<double, 8> c_{};
};

}  // namespace detail

enum class CutoffKind { Psi, Chi };

/// The two concrete cutoff profiles used by the localized identities.
///
/// psi: r^2/2 on [0,2], septic bridge on [2,3], zero beyond; satisfies
/// |psi'|^2 <= C_psi * psi with C_psi measured on construction.
/// chi: 1 on [0,1], septic bridge on [1,2], zero beyond; smooth monotone.
///
/// Both expose analytic derivatives through 4th order so the virial
/// right side can assemble Laplacians and bi-Laplacians exactly.
class CutoffProfile {
public:
    static const CutoffProfile& psi() {
        static const CutoffProfile p(CutoffKind::Psi);
        return p;
    }
    static const CutoffProfile& chi() {
        static const CutoffProfile c(CutoffKind::Chi);
        return c;
    }

    CutoffKind kind() const { return kind_; }
    double plateau_end() const { return plateau_end_; }
    double support_end() const { return support_end_; }

    double eval(double s, int deriv) const {
        if (s >= support_end_) return 0.0;
        if (s <= plateau_end_) {
            if (kind_ == CutoffKind::Chi) return deriv == 0 ? 1.0 : 0.0;
            switch (deriv) {  // s^2/2
                case 0: return 0.5 * s * s;
                case 1: return s;
                case 2: return 1.0;
                default: return 0.0;
            }
        }
        return bridge_.eval(s, deriv);
    }

    /// sup |psi'|^2 / psi, sampled densely over the support.
    double derivative_bound() const { return c_psi_; }

private:
    explicit CutoffProfile(CutoffKind kind) : kind_(kind) {
        if (kind == CutoffKind::Psi) {
            plateau_end_ = 2.0;
            support_end_ = 3.0;
            bridge_ = detail::SepticBridge(2.0, 3.0, {2.0, 2.0, 1.0, 0.0}, {0, 0, 0, 0});
        } else {
            plateau_end_ = 1.0;
            support_end_ = 2.0;
            bridge_ = detail::SepticBridge(1.0, 2.0, {1.0, 0.0, 0.0, 0.0}, {0, 0, 0, 0});
        }
        if (kind == CutoffKind::Psi) {
            double sup = 0;
            const int n = 10000;
            for (int i = 1; i <= n; ++i) {
                const double s = support_end_ * double(i) / n;
                const double v = eval(s, 0);
                if (v > 1e-14) sup = std::max(sup, eval(s, 1) * eval(s, 1) / v);
            }
            c_psi_ = sup;
        }
    }

    CutoffKind kind_;
    double plateau_end_ = 1, support_end_ = 2, c_psi_ = 0;
    detail::SepticBridge bridge_;
};

/// A cutoff profile bound to a localization scale R.
///
/// psi-kind scales as psi_R(x) = R^2 psi(x/R) (so psi_R = |x|^2/2 on the
/// plateau); chi-kind as chi_R(x) = chi(x/R).
struct CutoffSpec {
    CutoffKind kind = CutoffKind::Chi;
    double R = 1.0;

    static CutoffSpec psi(double R) { return {CutoffKind::Psi, R}; }
    static CutoffSpec chi(double R) { return {CutoffKind::Chi, R}; }

    const CutoffProfile& profile() const {
        return kind == CutoffKind::Psi ? CutoffProfile::psi() : CutoffProfile::chi();
    }

    double support_radius() const { return R * profile().support_end(); }

    double value(double r) const {
        const double amp = kind == CutoffKind::Psi ? R * R : 1.0;
        return amp * profile().eval(r / R, 0);
    }
    double d1(double r) const {
        const double amp = kind == CutoffKind::Psi ? R : 1.0 / R;
        return amp * profile().eval(r / R, 1);
    }
    double d2(double r) const {
        const double amp = kind == CutoffKind::Psi ? 1.0 : 1.0 / (R * R);
        return amp * profile().eval(r / R, 2);
    }

    /// Radial Laplacian f'' + (N-1) f'/r of the scaled cutoff.
    double laplacian(double r, int n) const {
        const double s = r / R;
        const auto& p = profile();
        if (s >= p.support_end()) return 0.0;
        if (s <= p.plateau_end()) return kind == CutoffKind::Psi ? double(n) : 0.0;
        const double amp = kind == CutoffKind::Psi ? 1.0 : 1.0 / (R * R);
        return amp * (p.eval(s, 2) + (n - 1) * p.eval(s, 1) / s);
    }

    /// Radial bi-Laplacian of the scaled cutoff:
    /// g'''' + 2(N-1) g'''/r + (N-1)(N-3)(g''/r^2 - g'/r^3) for g(|x|).
    double bilaplacian(double r, int n) const {
        const double s = r / R;
        const auto& p = profile();
        if (s >= p.support_end() || s <= p.plateau_end()) return 0.0;
        const double amp = (kind == CutoffKind::Psi ? 1.0 : 1.0 / (R * R)) / (R * R);
        const double d1 = p.eval(s, 1), d2 = p.eval(s, 2), d3 = p.eval(s, 3), d4 = p.eval(s, 4);
        return amp *
               (d4 + 2.0 * (n - 1) * d3 / s + double(n - 1) * (n - 3) * (d2 / (s * s) - d1 / (s * s * s)));
    }

    double derivative_bound() const { return profile().derivative_bound(); }
};

}  // namespace nlslab
