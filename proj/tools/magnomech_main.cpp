// magnomech_main.cpp — CLI front end: single-point evaluation, parameter
// sweeps, figure presets, and stability/physicality diagnostics.

#include "magnomech/config.hpp"
#include "magnomech/report_io.hpp"
#include "magnomech/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace magnomech;

// Per-subcommand parameter overrides; only flags the user actually passed are
// applied, so precedence is defaults < config file < command line.
struct ParamFlags {
    std::optional<double> kappa_a, gamma_m, gamma_b, g_m, g_b, kerr, delta_m, delta_a;
    std::optional<double> temperature, omega_b, omega_a_abs, omega_m_abs;
    std::string config_path;

    void attach(CLI::App& cmd) {
        cmd.add_option("--config", config_path, "parameter file (flat key = value lines)");
        cmd.add_option("--kappa_a", kappa_a, "cavity amplitude decay rate [omega_b]");
        cmd.add_option("--gamma_m", gamma_m, "magnon decay rate [omega_b]");
        cmd.add_option("--gamma_b", gamma_b, "mechanical damping rate [omega_b]");
        cmd.add_option("--g_m", g_m, "cavity-magnon coupling [omega_b]");
        cmd.add_option("--g_b", g_b, "linearized optomechanical coupling [omega_b]");
        cmd.add_option("--K", kerr, "signed Kerr strength [omega_b]");
        cmd.add_option("--Delta_m", delta_m, "bare magnon detuning [omega_b]");
        cmd.add_option("--Delta_a_tilde", delta_a, "effective cavity detuning [omega_b]");
        cmd.add_option("--temperature", temperature, "bath temperature [K]");
        cmd.add_option("--omega_b", omega_b, "mechanical angular frequency [rad/s]");
        cmd.add_option("--omega_a_abs", omega_a_abs, "cavity angular frequency [rad/s]");
        cmd.add_option("--omega_m_abs", omega_m_abs, "magnon angular frequency [rad/s]");
    }

    SystemParams resolve() const {
        SystemParams p;
        if (!config_path.empty())
            p = load_config_file(config_path, p);
        if (kappa_a) p.kappa_a = *kappa_a;
        if (gamma_m) p.gamma_m = *gamma_m;
        if (gamma_b) p.gamma_b = *gamma_b;
        if (g_m) p.g_m = *g_m;
        if (g_b) p.g_b = *g_b;
        if (kerr) p.kerr = *kerr;
        if (delta_m) p.delta_m = *delta_m;
        if (delta_a) p.delta_a = *delta_a;
        if (temperature) p.temperature = *temperature;
        if (omega_b) p.omega_b_abs = *omega_b;
        if (omega_a_abs) p.omega_a_abs = *omega_a_abs;
        if (omega_m_abs) p.omega_m_abs = *omega_m_abs;
        p.validate();
        return p;
    }
};

void write_result(const SweepResult& result, const std::string& out_path) {
    if (out_path.empty()) {
        write_csv(result, std::cout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open output file '" + out_path + "'");
    write_csv(result, out);
}

int run_point(const ParamFlags& flags, bool as_json) {
    const SystemParams p = flags.resolve();
    const BidirectionalReport rep = evaluate_point(p);
    if (as_json)
        std::cout << point_report_json(p, rep).dump(2) << "\n";
    else
        std::cout << point_report_text(p, rep);
    return 0;
}

int run_sweep_cmd(const ParamFlags& flags, const std::string& var,
                  std::optional<double> start, std::optional<double> stop, int count,
                  const std::string& directions, int threads, const std::string& out_path) {
    SweepSpec spec;
    spec.base = flags.resolve();
    spec.count = count;

    if (var == "Delta_m") {
        spec.variable = SweepVariable::delta_m;
        spec.start = -2.0;
        spec.stop = 0.0;
    } else if (var == "K") {
        spec.variable = SweepVariable::kerr;
        spec.start = 0.0;
        spec.stop = 1.2 * spec.base.kappa_a;
    } else {
        spec.variable = SweepVariable::temperature;
        spec.start = 1e-4;
        spec.stop = 0.5;
    }
    if (start) spec.start = *start;
    if (stop) spec.stop = *stop;

    if (directions == "both") spec.directions = SweepDirections::both;
    else if (directions == "positive") spec.directions = SweepDirections::positive;
    else spec.directions = SweepDirections::negative;

    write_result(run_sweep(spec, threads), out_path);
    return 0;
}

int run_figure(const std::string& name, int count, int threads, const std::string& out_path) {
    SweepSpec spec = figure_preset(name);
    if (count > 0)
        spec.count = count;
    write_result(run_sweep(spec, threads), out_path);
    return 0;
}

int run_check(const ParamFlags& flags) {
    const SystemParams p = flags.resolve();
    const DriftMatrix a = build_drift(p);
    const StabilityVerdict verdict = check_stability(a);
    std::cout << "spectral abscissa:  " << format_double(verdict.spectral_abscissa) << "\n";
    std::cout << "stable:             " << (verdict.stable ? "yes" : "no") << "\n";
    if (!verdict.stable) {
        std::cout << "covariance:         undefined (unstable point)\n";
        return 3;
    }
    const DiffusionMatrix d = build_diffusion(p);
    const CovarianceMatrix v = solve_lyapunov(a, d);
    std::cout << "lyapunov residual:  " << format_double(lyapunov_residual(a, d, v)) << "\n";
    std::cout << "physicality margin: " << format_double(physicality_margin(v)) << "\n";
    std::cout << "symplectic eigenvalues:";
    for (double nu : symplectic_eigenvalues(v.entries))
        std::cout << ' ' << format_double(nu);
    std::cout << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steady-state Gaussian entanglement and its nonreciprocity in "
                 "driven cavity-magnon optomechanics with a Kerr magnon mode"};
    app.require_subcommand(1);

    ParamFlags point_flags, sweep_flags, check_flags;
    bool point_json = false;

    CLI::App* point_cmd = app.add_subcommand("point", "evaluate one parameter point, both field directions");
    point_flags.attach(*point_cmd);
    point_cmd->add_flag("--json", point_json, "emit a JSON report");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep Delta_m, K, or T and write CSV");
    sweep_flags.attach(*sweep_cmd);
    std::string sweep_var;
    std::optional<double> sweep_start, sweep_stop;
    int sweep_count = 201;
    std::string sweep_directions = "both";
    int sweep_threads = 1;
    std::string sweep_out;
    sweep_cmd->add_option("--var", sweep_var, "swept variable")
        ->required()
        ->check(CLI::IsMember({"Delta_m", "K", "T"}));
    sweep_cmd->add_option("--start", sweep_start, "grid start (variable units)");
    sweep_cmd->add_option("--stop", sweep_stop, "grid stop (variable units)");
    sweep_cmd->add_option("--count", sweep_count, "grid points")->check(CLI::Range(2, 1000000));
    sweep_cmd->add_option("--directions", sweep_directions, "field directions to evaluate")
        ->check(CLI::IsMember({"both", "positive", "negative"}));
    sweep_cmd->add_option("--threads", sweep_threads, "worker threads")->check(CLI::Range(1, 256));
    sweep_cmd->add_option("--out", sweep_out, "output CSV path (default: stdout)");

    CLI::App* figure_cmd = app.add_subcommand("figure", "run a figure preset and write CSV");
    std::string figure_name;
    int figure_count = 0;
    int figure_threads = 1;
    std::string figure_out;
    figure_cmd->add_option("name", figure_name, "fig2|fig3|fig4a|fig4b|fig4c|fig4d")->required();
    figure_cmd->add_option("--count", figure_count, "override grid points");
    figure_cmd->add_option("--threads", figure_threads, "worker threads")->check(CLI::Range(1, 256));
    figure_cmd->add_option("--out", figure_out, "output CSV path (default: stdout)");

    CLI::App* check_cmd = app.add_subcommand("check", "stability and physicality diagnostics");
    check_flags.attach(*check_cmd);

    try {
        app.parse(argc, argv);
        if (*point_cmd)
            return run_point(point_flags, point_json);
        if (*sweep_cmd)
            return run_sweep_cmd(sweep_flags, sweep_var, sweep_start, sweep_stop, sweep_count,
                                 sweep_directions, sweep_threads, sweep_out);
        if (*figure_cmd)
            return run_figure(figure_name, figure_count, figure_threads, figure_out);
        if (*check_cmd)
            return run_check(check_flags);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const magnomech::AllPointsUnstableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const magnomech::NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const magnomech::UnstableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
