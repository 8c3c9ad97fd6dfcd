// sweep.hpp — Parameter sweeps over Delta_m, K, or T reproducing the figure
// data, with deterministic CSV serialization.

#pragma once

#include "magnomech/errors.hpp"
#include "magnomech/nonreciprocity.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace magnomech {

enum class SweepVariable { delta_m, kerr, temperature };
enum class SweepDirections { both, positive, negative };

inline const char* sweep_variable_name(SweepVariable v) {
    switch (v) {
    case SweepVariable::delta_m: return "Delta_m";
    case SweepVariable::kerr: return "K";
    case SweepVariable::temperature: return "T";
    }
    return "?";
}

// Grid description: units of omega_b for Delta_m and K, kelvin for T.
struct SweepSpec {
    SweepVariable variable = SweepVariable::delta_m;
    double start = -2.0;
    double stop = 0.0;
    int count = 201;
    SystemParams base;
    SweepDirections directions = SweepDirections::both;

    void validate() const {
        base.validate();
        if (count < 2)
            throw std::invalid_argument("SweepSpec: count must be >= 2");
        if (!(start < stop))
            throw std::invalid_argument("SweepSpec: start must be < stop");
        if (variable == SweepVariable::temperature && !(start > 0.0))
            throw std::invalid_argument("SweepSpec: temperature sweeps need start > 0");
    }
};

// Linear spacing for Delta_m and K; logarithmic for T.
inline std::vector<double> sweep_grid(const SweepSpec& spec) {
    spec.validate();
    std::vector<double> grid(static_cast<std::size_t>(spec.count));
    const double n = static_cast<double>(spec.count - 1);
    if (spec.variable == SweepVariable::temperature) {
        const double la = std::log(spec.start), lb = std::log(spec.stop);
        for (int i = 0; i < spec.count; ++i)
            grid[static_cast<std::size_t>(i)] = std::exp(la + (lb - la) * static_cast<double>(i) / n);
    } else {
        for (int i = 0; i < spec.count; ++i)
            grid[static_cast<std::size_t>(i)] = spec.start + (spec.stop - spec.start) * static_cast<double>(i) / n;
    }
    grid.front() = spec.start;
    grid.back() = spec.stop;
    return grid;
}

inline SystemParams apply_sweep_value(SystemParams base, SweepVariable variable, double value) {
    switch (variable) {
    case SweepVariable::delta_m: base.delta_m = value; break;
    case SweepVariable::kerr: base.kerr = value; break;
    case SweepVariable::temperature: base.temperature = value; break;
    }
    return base;
}

struct SweepRow {
    double value = 0.0;
    std::optional<EntanglementReport> forward;  // absent if direction not requested or point failed
    std::optional<EntanglementReport> backward;
    std::optional<double> c_ab, c_am, c_mb, c_r;
    std::string error; // per-point numerical failure, empty otherwise
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepRow> rows;
};

namespace detail {

inline SweepRow evaluate_row(const SweepSpec& spec, double value) {
    SweepRow row;
    row.value = value;
    SystemParams p = apply_sweep_value(spec.base, spec.variable, value);
    try {
        if (spec.directions == SweepDirections::both) {
            BidirectionalReport rep = bidirectional_report(p);
            row.forward = rep.forward;
            row.backward = rep.backward;
            row.c_ab = rep.c_ab;
            row.c_am = rep.c_am;
            row.c_mb = rep.c_mb;
            row.c_r = rep.c_r;
        } else if (spec.directions == SweepDirections::positive) {
            p.kerr = std::abs(p.kerr);
            row.forward = evaluate_direction(p);
        } else {
            p.kerr = -std::abs(p.kerr);
            row.backward = evaluate_direction(p);
        }
    } catch (const NumericalError& e) {
        row = SweepRow{};
        row.value = value;
        row.error = e.what();
    } catch (const UnstableError& e) {
        row = SweepRow{};
        row.value = value;
        row.error = e.what();
    }
    return row;
}

} // namespace detail

// Evaluate the grid; rows are gathered by index, so the result does not
// depend on the worker count or scheduling order.
inline SweepResult run_sweep(const SweepSpec& spec, int workers = 1) {
    spec.validate();
    const std::vector<double> grid = sweep_grid(spec);
    std::vector<SweepRow> rows(grid.size());

    std::atomic<std::size_t> next{0};
    auto drain = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= grid.size())
                break;
            rows[i] = detail::evaluate_row(spec, grid[i]);
        }
    };

    if (workers <= 1) {
        drain();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(drain);
        for (std::thread& t : pool)
            t.join();
    }

    bool any_stable = false;
    for (const SweepRow& row : rows) {
        if ((row.forward && row.forward->stable) || (row.backward && row.backward->stable))
            any_stable = true;
    }
    if (!any_stable)
        throw AllPointsUnstableError("run_sweep: no stable grid point in any requested direction");

    return {spec, std::move(rows)};
}

// The parameter points behind the published panels. Base parameters are the
// quoted experimental working values; only the swept variable and the
// panel-specific offsets differ.
inline SweepSpec figure_preset(const std::string& name) {
    SweepSpec spec;
    spec.base = SystemParams{}; // defaults are the quoted working parameters
    spec.count = 201;
    spec.directions = SweepDirections::both;

    if (name == "fig2" || name == "fig4a") {
        spec.variable = SweepVariable::delta_m;
        spec.start = -2.0;
        spec.stop = 0.0;
        spec.base.kerr = spec.base.kappa_a; // |K| = kappa_a
    } else if (name == "fig3" || name == "fig4b") {
        spec.variable = SweepVariable::kerr;
        spec.start = 0.0;
        spec.stop = 1.2 * spec.base.kappa_a;
        spec.base.delta_m = -1.0;
    } else if (name == "fig4c") {
        spec.variable = SweepVariable::temperature;
        spec.start = 1e-4;
        spec.stop = 0.5;
        spec.base.delta_m = -0.8;
        spec.base.kerr = spec.base.kappa_a;
    } else if (name == "fig4d") {
        spec.variable = SweepVariable::temperature;
        spec.start = 1e-4;
        spec.stop = 0.5;
        spec.base.delta_m = -1.0;
        spec.base.kerr = 0.8 * spec.base.kappa_a;
    } else {
        throw std::invalid_argument("figure_preset: unknown name '" + name +
                                    "' (expected fig2|fig3|fig4a|fig4b|fig4c|fig4d)");
    }
    return spec;
}

// ------------------------------- CSV output --------------------------------

inline constexpr const char* kCsvHeader =
    "sweep_var,value,stable_pos,stable_neg,E_ab_pos,E_ab_neg,E_am_pos,E_am_neg,"
    "E_mb_pos,E_mb_neg,Rmin_pos,Rmin_neg,C_ab,C_am,C_mb,C_R";

// Locale-independent, 17 significant digits.
inline std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace detail {

inline std::string csv_measure(const std::optional<EntanglementReport>& rep,
                               double EntanglementMeasures::* field) {
    if (!rep || !rep->measures)
        return {};
    return format_double((*rep->measures).*field);
}

inline std::string csv_stable(const std::optional<EntanglementReport>& rep) {
    if (!rep)
        return {};
    return rep->stable ? "1" : "0";
}

inline std::string csv_ratio(const std::optional<double>& r) {
    return r ? format_double(*r) : std::string{};
}

} // namespace detail

// One row per grid point; undefined values are empty fields, newline is \n.
inline void write_csv(const SweepResult& result, std::ostream& out) {
    out << kCsvHeader << "\n";
    const char* var = sweep_variable_name(result.spec.variable);
    for (const SweepRow& row : result.rows) {
        out << var << ',' << format_double(row.value)
            << ',' << detail::csv_stable(row.forward)
            << ',' << detail::csv_stable(row.backward)
            << ',' << detail::csv_measure(row.forward, &EntanglementMeasures::e_ab)
            << ',' << detail::csv_measure(row.backward, &EntanglementMeasures::e_ab)
            << ',' << detail::csv_measure(row.forward, &EntanglementMeasures::e_am)
            << ',' << detail::csv_measure(row.backward, &EntanglementMeasures::e_am)
            << ',' << detail::csv_measure(row.forward, &EntanglementMeasures::e_mb)
            << ',' << detail::csv_measure(row.backward, &EntanglementMeasures::e_mb)
            << ',' << detail::csv_measure(row.forward, &EntanglementMeasures::r_min)
            << ',' << detail::csv_measure(row.backward, &EntanglementMeasures::r_min)
            << ',' << detail::csv_ratio(row.c_ab)
            << ',' << detail::csv_ratio(row.c_am)
            << ',' << detail::csv_ratio(row.c_mb)
            << ',' << detail::csv_ratio(row.c_r)
            << "\n";
    }
}

inline std::string to_csv(const SweepResult& result) {
    std::ostringstream os;
    write_csv(result, os);
    return os.str();
}

} // namespace magnomech
