#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "nlslab/corpus.hpp"
#include "nlslab/dynamics.hpp"
#include "nlslab/errors.hpp"
#include "nlslab/field.hpp"
#include "nlslab/norms.hpp"
#include "nlslab/rho.hpp"

namespace nlslab {

/// One evaluated inequality: margin = rhs - lhs, passed within a relative
/// slack of the right side.
struct InequalityReport {
    double lhs = 0;
    double rhs = 0;
    double margin = 0;
    std::string witness;
    bool passed = false;

    static InequalityReport make(double lhs, double rhs, std::string witness, double tol_rel) {
        InequalityReport r;
        r.lhs = lhs;
        r.rhs = rhs;
        r.margin = rhs - lhs;
        r.witness = std::move(witness);
        r.passed = r.margin >= -tol_rel * std::abs(rhs);
        return r;
    }
};

/// Corpus-calibrated stand-ins for the abstract constants of the energy
/// bound and the radial ring interpolation estimate. The exact constants
/// are existential; these are empirical with an audit protocol.
struct GNConstants {
    double c_gn = 0;
    std::map<double, double> c_eta_ring;      // eta -> ring constant
    std::map<double, double> c_eta_exterior;  // eta -> exterior constant
    std::string corpus_id;

    double eta_ring(double eta) const { return lookup(c_eta_ring, eta); }
    double eta_exterior(double eta) const { return lookup(c_eta_exterior, eta); }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["c_gn"] = c_gn;
        j["corpus_id"] = corpus_id;
        for (const auto& [k, v] : c_eta_ring) j["c_eta_ring"][format_key(k)] = v;
        for (const auto& [k, v] : c_eta_exterior) j["c_eta_exterior"][format_key(k)] = v;
        return j;
    }

    static GNConstants from_json(const nlohmann::json& j) {
        GNConstants c;
        c.c_gn = j.at("c_gn").get<double>();
        c.corpus_id = j.value("corpus_id", "");
        if (j.contains("c_eta_ring"))
            for (const auto& [k, v] : j.at("c_eta_ring").items())
                c.c_eta_ring[std::stod(k)] = v.get<double>();
        if (j.contains("c_eta_exterior"))
            for (const auto& [k, v] : j.at("c_eta_exterior").items())
                c.c_eta_exterior[std::stod(k)] = v.get<double>();
        return c;
    }

private:
    static std::string format_key(double eta) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", eta);
        return buf;
    }
    static double lookup(const std::map<double, double>& m, double eta) {
        auto it = m.find(eta);
        if (it != m.end()) return it->second;
        // nearest calibrated eta at or below the request (C_eta decreases
        // in eta, so this errs on the generous side of the bound)
        auto ub = m.upper_bound(eta);
        if (ub == m.begin()) throw OutOfRange("GNConstants: no calibrated eta <= requested");
        return std::prev(ub)->second;
    }
};

/// The scale-invariant ratio \int|u|^{p+1} / (|u|_{L^{p_c}}^{p-1} |grad u|^2)
/// whose corpus sup fixes the energy-form constant.
inline double weinstein_ratio(const RadialField& u) {
    const double g = gradient_norm_sq(u);
    if (!(g > 1e-280)) throw DegenerateField("weinstein_ratio: zero gradient norm");
    const double pp1 = power_integrator(u, u.params().p + 1.0).total();
    const double lpc = lebesgue_norm(u, u.params().p_c);
    return pp1 / (std::pow(lpc, u.params().p - 1.0) * g);
}

/// Largest constant for which E(u) >= 1/2 |grad u|^2 [1 - (|u|_{p_c}/C)^{p-1}]
/// holds across the corpus: C^{p-1} = (p+1) / (2 sup ratio).
inline GNConstants estimate_cgn(const std::vector<RadialField>& corpus,
                                const std::string& corpus_id = "") {
    if (corpus.empty()) throw OutOfRange("estimate_cgn: empty corpus");
    double sup = 0;
    for (const auto& u : corpus) sup = std::max(sup, weinstein_ratio(u));
    GNConstants c;
    const double p = corpus.front().params().p;
    c.c_gn = std::pow((p + 1.0) / (2.0 * sup), 1.0 / (p - 1.0));
    c.corpus_id = corpus_id;
    return c;
}

/// Energy lower bound E(u) >= 1/2 |grad u|^2 [1 - (|u|_{p_c}/C_GN)^{p-1}].
inline InequalityReport check_energy_gn(const RadialField& u, const GNConstants& c,
                                        double tol_rel = 5e-2,
                                        const std::string& witness = "") {
    const double p = u.params().p;
    const double g = gradient_norm_sq(u);
    const double lpc = lebesgue_norm(u, u.params().p_c);
    const double lhs = 0.5 * g * (1.0 - std::pow(lpc / c.c_gn, p - 1.0));
    const double rhs = energy(u);
    return InequalityReport::make(lhs, rhs, witness, tol_rel);
}

namespace detail {

struct RingTerms {
    double lhs = 0;       // \int |u|^{p+1} over the region
    double grad = 0;      // \int |grad u|^2 over the region
    double bracket = 0;   // rho^{(p+3)/(5-p)} + rho^{(p+1)/2}
    double scale_pow = 0; // D^{2(1-s_c)} (or R^...)
};

inline RingTerms ring_terms(const RadialField& u, double r_lo, double r_hi, double rho_base) {
    const Params& q = u.params();
    RingTerms t;
    t.lhs = power_integrator(u, q.p + 1.0).between(r_lo, r_hi);
    t.grad = gradient_integrator(u).between(r_lo, r_hi);
    const double rho = rho_seminorm(u, rho_base);
    t.bracket = std::pow(rho, (q.p + 3.0) / (5.0 - q.p)) + std::pow(rho, 0.5 * (q.p + 1.0));
    t.scale_pow = std::pow(rho_base, 2.0 * (1.0 - q.s_c));
    return t;
}

}  // namespace detail

/// Ring estimate on {D <= |x| <= 2D}:
/// \int_C |u|^{p+1} <= eta |grad u|^2_{L^2(C)}
///                     + C_eta/D^{2(1-s_c)} [rho^{(p+3)/(5-p)} + rho^{(p+1)/2}].
inline InequalityReport check_radial_gn_ring(const RadialField& u, double D, double eta,
                                             const GNConstants& c, double tol_rel = 5e-2) {
    if (!(eta > 0)) throw OutOfRange("check_radial_gn_ring: eta must be > 0");
    if (2.0 * D > u.grid().r_max() * (1 + 1e-12))
        throw OutOfRange("check_radial_gn_ring: ring leaves the domain");
    const auto t = detail::ring_terms(u, D, 2.0 * D, D);
    const double rhs = eta * t.grad + c.eta_ring(eta) * t.bracket / t.scale_pow;
    char w[96];
    std::snprintf(w, sizeof w, "ring D=%.6g eta=%.3g", D, eta);
    return InequalityReport::make(t.lhs, rhs, w, tol_rel);
}

/// Exterior estimate on {|x| >= R}, plus the dyadic-summation consistency
/// residual: the exterior integral re-assembled from dyadic rings.
struct ExteriorReport {
    InequalityReport report;
    double dyadic_residual = 0;  // |sum of rings - exterior| / max(exterior, tiny)
};

inline ExteriorReport check_radial_gn_exterior(const RadialField& u, double R, double eta,
                                               const GNConstants& c, double tol_rel = 5e-2) {
    if (!(eta > 0)) throw OutOfRange("check_radial_gn_exterior: eta must be > 0");
    const double r_max = u.grid().r_max();
    if (4.0 * R > r_max * (1 + 1e-12))
        throw OutOfRange("check_radial_gn_exterior: need R <= r_max/4 (two dyadic rings)");
    const auto t = detail::ring_terms(u, R, r_max, R);
    const double rhs = eta * t.grad + c.eta_exterior(eta) * t.bracket / t.scale_pow;
    char w[96];
    std::snprintf(w, sizeof w, "exterior R=%.6g eta=%.3g", R, eta);

    ExteriorReport out;
    out.report = InequalityReport::make(t.lhs, rhs, w, tol_rel);
    const auto pc1 = power_integrator(u, u.params().p + 1.0);
    double rings = 0;
    for (double d = R; d < r_max; d *= 2.0) rings += pc1.between(d, std::min(2.0 * d, r_max));
    out.dyadic_residual = std::abs(rings - t.lhs) / std::max(t.lhs, 1e-300);
    return out;
}

/// Smallest constants making the ring / exterior estimates hold across a
/// corpus and a geometric ladder of scales, one entry per eta.
inline void calibrate_radial_gn(GNConstants& c, const std::vector<RadialField>& corpus,
                                const std::vector<double>& etas = {0.05, 0.1, 0.5, 1.0}) {
    for (double eta : etas) {
        double need_ring = 0, need_ext = 0;
        for (const auto& u : corpus) {
            const double r_max = u.grid().r_max();
            for (double D = r_max / 256.0; D <= r_max / 4.0; D *= 2.0) {
                const auto tr = detail::ring_terms(u, D, 2.0 * D, D);
                if (tr.bracket > 1e-280)
                    need_ring = std::max(
                        need_ring, (tr.lhs - eta * tr.grad) * tr.scale_pow / tr.bracket);
                const auto te = detail::ring_terms(u, D, r_max, D);
                if (te.bracket > 1e-280)
                    need_ext = std::max(
                        need_ext, (te.lhs - eta * te.grad) * te.scale_pow / te.bracket);
            }
        }
        c.c_eta_ring[eta] = need_ring;
        c.c_eta_exterior[eta] = need_ext;
    }
}

/// Fresh-corpus audit outcome. Soft violations (within the stated relative
/// slack) feed the augmentation loop; hard violations are findings.
struct AuditOutcome {
    std::size_t checked = 0;
    std::size_t soft_violations = 0;
    std::size_t hard_violations = 0;
    double worst_margin_rel = 0;  // most negative margin / |rhs|
};

inline AuditOutcome audit_energy_gn(const std::vector<RadialField>& fresh, const GNConstants& c,
                                    double slack = 5e-2) {
    AuditOutcome out;
    for (const auto& u : fresh) {
        const auto rep = check_energy_gn(u, c, 0.0);
        ++out.checked;
        if (rep.margin < 0) {
            const double rel = rep.margin / std::max(std::abs(rep.rhs), 1e-300);
            out.worst_margin_rel = std::min(out.worst_margin_rel, rel);
            (rel >= -slack ? out.soft_violations : out.hard_violations) += 1;
        }
    }
    return out;
}

inline AuditOutcome audit_radial_gn(const std::vector<RadialField>& fresh, const GNConstants& c,
                                    double eta, double slack = 5e-2) {
    AuditOutcome out;
    for (const auto& u : fresh) {
        const double r_max = u.grid().r_max();
        for (double R = r_max / 64.0; R <= r_max / 4.0; R *= 2.0) {
            const auto ring = check_radial_gn_ring(u, R, eta, c, 0.0);
            const auto ext = check_radial_gn_exterior(u, R, eta, c, 0.0).report;
            for (const auto& rep : {ring, ext}) {
                ++out.checked;
                if (rep.margin < 0) {
                    const double rel = rep.margin / std::max(std::abs(rep.rhs), 1e-300);
                    out.worst_margin_rel = std::min(out.worst_margin_rel, rel);
                    (rel >= -slack ? out.soft_violations : out.hard_violations) += 1;
                }
            }
        }
    }
    return out;
}

/// Calibrate on one corpus, audit on a fresh one; soft violators join the
/// calibration set and the constants are re-estimated, a bounded number of
/// rounds. Returns the final constants and the last audit outcomes.
struct CalibrationResult {
    GNConstants constants;
    AuditOutcome energy_audit;
    AuditOutcome radial_audit;  // at the smallest calibrated eta
    int rounds = 0;
};

inline CalibrationResult calibrate_with_audit(const Params& params, const CorpusSpec& cal_spec,
                                              const CorpusSpec& fresh_spec,
                                              const std::vector<double>& etas = {0.05, 0.1, 0.5,
                                                                                 1.0},
                                              int max_rounds = 3) {
    auto corpus = make_corpus(params, cal_spec);
    const auto fresh = make_corpus(params, fresh_spec);
    CalibrationResult res;
    for (int round = 0; round < max_rounds; ++round) {
        res.rounds = round + 1;
        res.constants = estimate_cgn(corpus, cal_spec.id());
        calibrate_radial_gn(res.constants, corpus, etas);
        res.energy_audit = audit_energy_gn(fresh, res.constants);
        res.radial_audit = audit_radial_gn(fresh, res.constants, etas.front());
        if (res.energy_audit.soft_violations + res.energy_audit.hard_violations +
                res.radial_audit.soft_violations + res.radial_audit.hard_violations ==
            0)
            break;
        // augment: fold every violator into the calibration set
        for (const auto& u : fresh) {
            if (check_energy_gn(u, res.constants, 0.0).margin < 0) corpus.push_back(u);
        }
        for (const auto& u : fresh) {
            bool bad = false;
            const double r_max = u.grid().r_max();
            for (double R = r_max / 64.0; R <= r_max / 4.0 && !bad; R *= 2.0)
                bad = check_radial_gn_ring(u, R, etas.front(), res.constants, 0.0).margin < 0 ||
                      check_radial_gn_exterior(u, R, etas.front(), res.constants, 0.0)
                              .report.margin < 0;
            if (bad) corpus.push_back(u);
        }
    }
    return res;
}

}  // namespace nlslab
