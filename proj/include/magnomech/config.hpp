// config.hpp — Flat key = value parameter files.
//
// One assignment per line, '#' starts a comment, keys are the public
// parameter names: omega_b, omega_a_abs, omega_m_abs, kappa_a, gamma_m,
// gamma_b, g_m, g_b, K, Delta_m, Delta_a_tilde, temperature.

#pragma once

#include "magnomech/model.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>

namespace magnomech {

inline void set_param(SystemParams& p, const std::string& key, double value) {
    if (key == "kappa_a") p.kappa_a = value;
    else if (key == "gamma_m") p.gamma_m = value;
    else if (key == "gamma_b") p.gamma_b = value;
    else if (key == "g_m") p.g_m = value;
    else if (key == "g_b") p.g_b = value;
    else if (key == "K") p.kerr = value;
    else if (key == "Delta_m") p.delta_m = value;
    else if (key == "Delta_a_tilde") p.delta_a = value;
    else if (key == "temperature") p.temperature = value;
    else if (key == "omega_b") p.omega_b_abs = value;
    else if (key == "omega_a_abs") p.omega_a_abs = value;
    else if (key == "omega_m_abs") p.omega_m_abs = value;
    else throw std::invalid_argument("config: unknown parameter key '" + key + "'");
}

namespace detail {

inline std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace detail

inline SystemParams load_config(std::istream& in, SystemParams base = {}) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string text = detail::trim(line.substr(eq + 1));
        char* end = nullptr;
        const double value = std::strtod(text.c_str(), &end);
        if (text.empty() || end != text.c_str() + text.size())
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        ": cannot parse value '" + text + "'");
        set_param(base, key, value);
    }
    return base;
}

inline SystemParams load_config_file(const std::string& path, SystemParams base = {}) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("config: cannot open '" + path + "'");
    return load_config(in, base);
}

} // namespace magnomech
