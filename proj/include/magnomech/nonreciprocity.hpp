// nonreciprocity.hpp — Evaluate both magnetic-field directions and form the
// bidirectional contrast ratios.

#pragma once

#include "magnomech/entanglement.hpp"
#include "magnomech/model.hpp"
#include "magnomech/steady_state.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace magnomech {

// |e+ - e-| / (e+ + e-), in [0, 1]; 0 when both measures vanish.
inline double contrast_ratio(double e_plus, double e_minus) {
    if (!(e_plus >= 0.0) || !(e_minus >= 0.0))
        throw std::invalid_argument("contrast_ratio: inputs must be >= 0");
    const double sum = e_plus + e_minus;
    if (sum == 0.0)
        return 0.0;
    return std::abs(e_plus - e_minus) / sum;
}

// Full pipeline for one signed parameter point:
// drift/diffusion -> stability -> Lyapunov -> measures.
inline EntanglementReport evaluate_direction(const SystemParams& params) {
    const DriftMatrix a = build_drift(params);
    const StabilityVerdict verdict = check_stability(a);

    EntanglementReport report;
    report.stable = verdict.stable;
    report.spectral_abscissa = verdict.spectral_abscissa;
    if (!verdict.stable)
        return report;

    const DiffusionMatrix d = build_diffusion(params);
    const CovarianceMatrix v = solve_lyapunov(a, d);

    EntanglementMeasures m;
    m.e_ab = log_negativity(v, Partition::one_one(Mode::cavity, Mode::mechanics));
    m.e_am = log_negativity(v, Partition::one_one(Mode::cavity, Mode::magnon));
    m.e_mb = log_negativity(v, Partition::one_one(Mode::magnon, Mode::mechanics));
    m.r_min = min_residual_contangle(v);
    m.lyapunov_residual = lyapunov_residual(a, d, v);
    report.measures = m;
    return report;
}

// Paired reports for the two field directions. Ratios are undefined (absent)
// when either direction is unstable; C_R is additionally undefined when a
// direction reports a monogamy violation (negative r_min beyond tolerance).
struct BidirectionalReport {
    EntanglementReport forward;  // K = +|K|, axis [100]
    EntanglementReport backward; // K = -|K|, axis [110]
    std::optional<double> c_ab, c_am, c_mb, c_r;
};

// The Kerr field of `params` is taken as the magnitude |K|; both signed
// variants are evaluated.
inline BidirectionalReport bidirectional_report(const SystemParams& params) {
    SystemParams fwd = params;
    fwd.kerr = std::abs(params.kerr);

    BidirectionalReport report;
    report.forward = evaluate_direction(fwd);
    report.backward = evaluate_direction(flip_direction(fwd));

    if (report.forward.measures && report.backward.measures) {
        const EntanglementMeasures& f = *report.forward.measures;
        const EntanglementMeasures& b = *report.backward.measures;
        report.c_ab = contrast_ratio(f.e_ab, b.e_ab);
        report.c_am = contrast_ratio(f.e_am, b.e_am);
        report.c_mb = contrast_ratio(f.e_mb, b.e_mb);
        if (f.r_min >= 0.0 && b.r_min >= 0.0)
            report.c_r = contrast_ratio(f.r_min, b.r_min);
    }
    return report;
}

} // namespace magnomech
