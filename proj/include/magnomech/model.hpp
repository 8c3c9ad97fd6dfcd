// model.hpp — Physical parameter set and the drift / diffusion matrices of the
// linearized cavity-magnon-optomechanical dynamics.
//
// Quadrature ordering everywhere: u = (x_a, y_a, x_m, y_m, q, p) for the
// cavity, magnon (Kittel), and mechanical modes. All rates and detunings are
// dimensionless multiples of the mechanical frequency omega_b; absolute
// angular frequencies (rad/s) enter only through the thermal occupations.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace magnomech {

using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vec6 = Eigen::Matrix<double, 6, 1>;

inline constexpr double k_hbar = 1.054571817e-34;   // J s
inline constexpr double k_boltzmann = 1.380649e-23; // J / K (exact SI)

// One experimental configuration. The sign of the Kerr strength encodes the
// static magnetic-field direction: positive for the crystallographic axis
// [100], negative for [110].
struct SystemParams {
    double kappa_a = 0.4;  // cavity amplitude decay rate
    double gamma_m = 0.4;  // magnon decay rate
    double gamma_b = 1e-5; // mechanical damping rate
    double g_m = 0.5;      // cavity-magnon coupling
    double g_b = 0.5;      // effective linearized optomechanical coupling
    double kerr = 0.4;     // signed Kerr strength K
    double delta_m = -1.0; // bare magnon detuning omega_m - omega_0
    double delta_a = 1.0;  // effective cavity detuning

    double temperature = 0.010; // bath temperature [K]

    // absolute angular frequencies [rad/s], thermal occupations only
    double omega_b_abs = 2.0 * std::numbers::pi * 10.0e6;
    double omega_a_abs = 2.0 * std::numbers::pi * 10.0e9;
    double omega_m_abs = 2.0 * std::numbers::pi * 10.0e9;

    // Kerr-induced magnon frequency shift Delta_K = 2K
    double delta_kerr() const { return 2.0 * kerr; }
    // effective magnon detuning Delta_m + Delta_K
    double delta_m_eff() const { return delta_m + delta_kerr(); }
    // the two-magnon term splits the magnon response: Delta_m_eff +- Delta_K/2
    double delta_m_plus() const { return delta_m_eff() + kerr; }
    double delta_m_minus() const { return delta_m_eff() - kerr; }

    void validate() const {
        auto positive = [](double x, const char* name) {
            if (!(x > 0.0) || !std::isfinite(x))
                throw std::invalid_argument(std::string("SystemParams: ") + name + " must be > 0 and finite");
        };
        auto nonneg = [](double x, const char* name) {
            if (!(x >= 0.0) || !std::isfinite(x))
                throw std::invalid_argument(std::string("SystemParams: ") + name + " must be >= 0 and finite");
        };
        positive(kappa_a, "kappa_a");
        positive(gamma_m, "gamma_m");
        positive(gamma_b, "gamma_b");
        positive(omega_b_abs, "omega_b");
        positive(omega_a_abs, "omega_a_abs");
        positive(omega_m_abs, "omega_m_abs");
        nonneg(g_m, "g_m");
        nonneg(g_b, "g_b");
        nonneg(temperature, "temperature");
        if (!std::isfinite(kerr) || !std::isfinite(delta_m) || !std::isfinite(delta_a))
            throw std::invalid_argument("SystemParams: kerr, delta_m, delta_a must be finite");
    }
};

// Bose-Einstein mean occupation 1/(exp(hbar w / kB T) - 1); exact 0 at T = 0.
// For hbar w / kB T beyond ~700, expm1 saturates to inf and the result
// underflows cleanly to 0.
inline double thermal_occupation(double omega_abs, double temperature) {
    if (!(omega_abs > 0.0))
        throw std::invalid_argument("thermal_occupation: omega_abs must be > 0");
    if (!(temperature >= 0.0))
        throw std::invalid_argument("thermal_occupation: temperature must be >= 0");
    if (temperature == 0.0)
        return 0.0;
    return 1.0 / std::expm1(k_hbar * omega_abs / (k_boltzmann * temperature));
}

// Effective two-magnon strength K = 2 K0 N_m; the sign follows K0.
inline double kerr_strength(double k0, double magnon_number) {
    return 2.0 * k0 * magnon_number;
}

// Drift matrix of du/dt = A u + f, in units of omega_b.
struct DriftMatrix {
    Mat6 entries;
};

inline DriftMatrix build_drift(const SystemParams& p) {
    p.validate();
    const double dm_minus = p.delta_m_minus();
    const double dm_plus = p.delta_m_plus();
    Mat6 a;
    // clang-format off
    a << -p.kappa_a,  p.delta_a,   0.0,        p.g_m,      0.0,  0.0,
         -p.delta_a, -p.kappa_a,  -p.g_m,      0.0,        p.g_b, 0.0,
          0.0,        p.g_m,      -p.gamma_m,  dm_minus,   0.0,  0.0,
         -p.g_m,      0.0,        -dm_plus,   -p.gamma_m,  0.0,  0.0,
          0.0,        0.0,         0.0,        0.0,        0.0,  1.0,
          p.g_b,      0.0,         0.0,        0.0,       -1.0, -p.gamma_b;
    // clang-format on
    return {a};
}

// Diagonal noise-strength matrix of the input correlators, units of omega_b.
struct DiffusionMatrix {
    Vec6 diagonal;

    Mat6 entries() const { return Mat6(diagonal.asDiagonal()); }
};

inline DiffusionMatrix build_diffusion(const SystemParams& p) {
    p.validate();
    const double n_a = thermal_occupation(p.omega_a_abs, p.temperature);
    const double n_m = thermal_occupation(p.omega_m_abs, p.temperature);
    const double n_b = thermal_occupation(p.omega_b_abs, p.temperature);
    Vec6 d;
    d << p.kappa_a * (2.0 * n_a + 1.0), p.kappa_a * (2.0 * n_a + 1.0),
         p.gamma_m * (2.0 * n_m + 1.0), p.gamma_m * (2.0 * n_m + 1.0),
         0.0, p.gamma_b * (2.0 * n_b + 1.0);
    return {d};
}

// Reverse the static magnetic field: K -> -K, hence Delta_K -> -Delta_K.
inline SystemParams flip_direction(SystemParams p) {
    p.kerr = -p.kerr;
    return p;
}

} // namespace magnomech
