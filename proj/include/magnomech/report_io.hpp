// report_io.hpp — Text and JSON serialization of single-point evaluations.

#pragma once

#include "magnomech/nonreciprocity.hpp"
#include "magnomech/sweep.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace magnomech {

// Single-point pipeline run over both field directions.
inline BidirectionalReport evaluate_point(const SystemParams& params) {
    params.validate();
    return bidirectional_report(params);
}

namespace detail {

inline void direction_text(std::ostream& os, const char* label, const EntanglementReport& rep) {
    os << label << "\n";
    os << "  stable:             " << (rep.stable ? "yes" : "no") << "\n";
    os << "  spectral abscissa:  " << format_double(rep.spectral_abscissa) << "\n";
    if (rep.measures) {
        const EntanglementMeasures& m = *rep.measures;
        os << "  lyapunov residual:  " << format_double(m.lyapunov_residual) << "\n";
        os << "  E_ab:               " << format_double(m.e_ab) << "\n";
        os << "  E_am:               " << format_double(m.e_am) << "\n";
        os << "  E_mb:               " << format_double(m.e_mb) << "\n";
        os << "  R_min:              " << format_double(m.r_min) << "\n";
    } else {
        os << "  measures:           undefined (unstable point)\n";
    }
}

inline std::string ratio_text(const std::optional<double>& r) {
    return r ? format_double(*r) : std::string("undefined");
}

} // namespace detail

inline std::string point_report_text(const SystemParams& params, const BidirectionalReport& rep) {
    std::ostringstream os;
    os << "parameters (multiples of omega_b; temperature in K; omega_* in rad/s):\n";
    os << "  kappa_a = " << format_double(params.kappa_a)
       << ", gamma_m = " << format_double(params.gamma_m)
       << ", gamma_b = " << format_double(params.gamma_b) << "\n";
    os << "  g_m = " << format_double(params.g_m)
       << ", g_b = " << format_double(params.g_b)
       << ", |K| = " << format_double(std::abs(params.kerr)) << "\n";
    os << "  Delta_m = " << format_double(params.delta_m)
       << ", Delta_a_tilde = " << format_double(params.delta_a)
       << ", temperature = " << format_double(params.temperature) << "\n";
    os << "  omega_b = " << format_double(params.omega_b_abs)
       << ", omega_a_abs = " << format_double(params.omega_a_abs)
       << ", omega_m_abs = " << format_double(params.omega_m_abs) << "\n";
    detail::direction_text(os, "direction K > 0 (axis [100]):", rep.forward);
    detail::direction_text(os, "direction K < 0 (axis [110]):", rep.backward);
    os << "contrast ratios:\n";
    os << "  C_ab = " << detail::ratio_text(rep.c_ab)
       << ", C_am = " << detail::ratio_text(rep.c_am)
       << ", C_mb = " << detail::ratio_text(rep.c_mb)
       << ", C_R = " << detail::ratio_text(rep.c_r) << "\n";
    return os.str();
}

namespace detail {

inline nlohmann::json direction_json(const EntanglementReport& rep) {
    nlohmann::json j;
    j["stable"] = rep.stable;
    j["spectral_abscissa"] = rep.spectral_abscissa;
    if (rep.measures) {
        const EntanglementMeasures& m = *rep.measures;
        j["lyapunov_residual"] = m.lyapunov_residual;
        j["E_ab"] = m.e_ab;
        j["E_am"] = m.e_am;
        j["E_mb"] = m.e_mb;
        j["R_min"] = m.r_min;
    } else {
        j["lyapunov_residual"] = nullptr;
        j["E_ab"] = nullptr;
        j["E_am"] = nullptr;
        j["E_mb"] = nullptr;
        j["R_min"] = nullptr;
    }
    return j;
}

inline nlohmann::json ratio_json(const std::optional<double>& r) {
    return r ? nlohmann::json(*r) : nlohmann::json(nullptr);
}

} // namespace detail

inline nlohmann::json point_report_json(const SystemParams& params, const BidirectionalReport& rep) {
    nlohmann::json j;
    j["params"] = {
        {"kappa_a", params.kappa_a},   {"gamma_m", params.gamma_m},
        {"gamma_b", params.gamma_b},   {"g_m", params.g_m},
        {"g_b", params.g_b},           {"K", params.kerr},
        {"Delta_m", params.delta_m},   {"Delta_a_tilde", params.delta_a},
        {"temperature", params.temperature},
        {"omega_b", params.omega_b_abs},
        {"omega_a_abs", params.omega_a_abs},
        {"omega_m_abs", params.omega_m_abs},
    };
    j["forward"] = detail::direction_json(rep.forward);
    j["backward"] = detail::direction_json(rep.backward);
    j["contrast"] = {
        {"C_ab", detail::ratio_json(rep.c_ab)},
        {"C_am", detail::ratio_json(rep.c_am)},
        {"C_mb", detail::ratio_json(rep.c_mb)},
        {"C_R", detail::ratio_json(rep.c_r)},
    };
    return j;
}

} // namespace magnomech
