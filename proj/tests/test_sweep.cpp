#include "magnomech/sweep.hpp"

#include "magnomech/config.hpp"
#include "magnomech/report_io.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

using namespace magnomech;
using Catch::Approx;

TEST_CASE("figure presets: caption parameters") {
    const SweepSpec fig2 = figure_preset("fig2");
    REQUIRE(fig2.variable == SweepVariable::delta_m);
    REQUIRE(fig2.start == -2.0);
    REQUIRE(fig2.stop == 0.0);
    REQUIRE(fig2.base.kappa_a == 0.4);
    REQUIRE(fig2.base.gamma_m == 0.4);
    REQUIRE(fig2.base.gamma_b == 1e-5);
    REQUIRE(fig2.base.g_m == 0.5);
    REQUIRE(fig2.base.g_b == 0.5);
    REQUIRE(fig2.base.delta_a == 1.0);
    REQUIRE(fig2.base.temperature == 0.010);
    REQUIRE(fig2.base.kerr == fig2.base.kappa_a);

    const SweepSpec fig3 = figure_preset("fig3");
    REQUIRE(fig3.variable == SweepVariable::kerr);
    REQUIRE(fig3.base.delta_m == -1.0);
    REQUIRE(fig3.start == 0.0);
    REQUIRE(fig3.stop == Approx(1.2 * 0.4));

    const SweepSpec fig4a = figure_preset("fig4a");
    REQUIRE(fig4a.variable == SweepVariable::delta_m);
    REQUIRE(fig4a.base.kerr == 0.4);

    const SweepSpec fig4c = figure_preset("fig4c");
    REQUIRE(fig4c.variable == SweepVariable::temperature);
    REQUIRE(fig4c.base.delta_m == -0.8);
    REQUIRE(fig4c.base.kerr == 0.4);

    const SweepSpec fig4d = figure_preset("fig4d");
    REQUIRE(fig4d.variable == SweepVariable::temperature);
    REQUIRE(fig4d.base.delta_m == -1.0);
    REQUIRE(fig4d.base.kerr == Approx(0.8 * 0.4));

    REQUIRE_THROWS_AS(figure_preset("fig5"), std::invalid_argument);
}

TEST_CASE("sweep grid: linear spacing with exact endpoints") {
    SweepSpec spec = figure_preset("fig2");
    spec.count = 11;
    const auto grid = sweep_grid(spec);
    REQUIRE(grid.size() == 11);
    REQUIRE(grid.front() == -2.0);
    REQUIRE(grid.back() == 0.0);
    for (std::size_t k = 1; k < grid.size(); ++k)
        REQUIRE(grid[k] - grid[k - 1] == Approx(0.2).margin(1e-12));
}

TEST_CASE("sweep grid: temperature spacing is logarithmic") {
    SweepSpec spec = figure_preset("fig4c");
    spec.count = 9;
    const auto grid = sweep_grid(spec);
    REQUIRE(grid.front() == spec.start);
    REQUIRE(grid.back() == spec.stop);
    const double ratio = grid[1] / grid[0];
    for (std::size_t k = 2; k < grid.size(); ++k)
        REQUIRE(grid[k] / grid[k - 1] == Approx(ratio).epsilon(1e-10));
}

TEST_CASE("sweep spec validation") {
    SweepSpec spec = figure_preset("fig2");
    spec.count = 1;
    REQUIRE_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = figure_preset("fig2");
    spec.start = 0.0;
    spec.stop = -2.0;
    REQUIRE_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = figure_preset("fig4c");
    spec.start = 0.0;
    REQUIRE_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = figure_preset("fig2");
    spec.base.kappa_a = -0.4;
    REQUIRE_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("run sweep: deterministic across worker counts") {
    SweepSpec spec = figure_preset("fig2");
    spec.count = 21;
    const SweepResult serial = run_sweep(spec, 1);
    const SweepResult threaded = run_sweep(spec, 3);
    REQUIRE(to_csv(serial) == to_csv(threaded));
}

TEST_CASE("run sweep: point evaluation matches the corresponding row") {
    SweepSpec spec = figure_preset("fig2");
    spec.count = 21;
    const SweepResult result = run_sweep(spec);
    const std::size_t mid = 10;
    const SystemParams p = apply_sweep_value(spec.base, spec.variable, result.rows[mid].value);
    const BidirectionalReport rep = evaluate_point(p);
    REQUIRE(rep.forward.measures->e_am == result.rows[mid].forward->measures->e_am);
    REQUIRE(rep.backward.measures->e_mb == result.rows[mid].backward->measures->e_mb);
    REQUIRE(*rep.c_ab == *result.rows[mid].c_ab);
    REQUIRE(*rep.c_r == *result.rows[mid].c_r);
}

TEST_CASE("run sweep: K = 0 direction columns coincide") {
    SweepSpec spec = figure_preset("fig2");
    spec.count = 11;
    spec.base.kerr = 0.0;
    const SweepResult result = run_sweep(spec);
    for (const SweepRow& row : result.rows) {
        REQUIRE(row.forward->measures->e_ab == row.backward->measures->e_ab);
        REQUIRE(row.forward->measures->r_min == row.backward->measures->r_min);
        REQUIRE(*row.c_ab == 0.0);
        REQUIRE(*row.c_am == 0.0);
        REQUIRE(*row.c_mb == 0.0);
        REQUIRE(*row.c_r == 0.0);
    }
}

TEST_CASE("run sweep: single-direction spec leaves the other column empty") {
    SweepSpec spec = figure_preset("fig2");
    spec.count = 5;
    spec.directions = SweepDirections::positive;
    const SweepResult result = run_sweep(spec);
    for (const SweepRow& row : result.rows) {
        REQUIRE(row.forward.has_value());
        REQUIRE_FALSE(row.backward.has_value());
        REQUIRE_FALSE(row.c_ab.has_value());
    }
    const std::string csv = to_csv(result);
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    REQUIRE(line == kCsvHeader);
    std::getline(is, line);
    // stable_neg column (4th field) must be empty, not zero
    std::size_t pos = 0;
    int commas = 0;
    while (commas < 3 && pos != std::string::npos) {
        pos = line.find(',', pos) + 1;
        ++commas;
    }
    REQUIRE(line[pos] == ',');
}

TEST_CASE("run sweep: all points unstable raises the dedicated error") {
    SweepSpec spec = figure_preset("fig2");
    spec.count = 5;
    spec.base.delta_a = -1.0; // anti-damped everywhere on the grid
    REQUIRE_THROWS_AS(run_sweep(spec), AllPointsUnstableError);
}

TEST_CASE("run sweep: unstable rows serialize with empty measure fields") {
    SweepSpec spec = figure_preset("fig3");
    spec.count = 5;
    spec.start = 0.6;  // |K| in [0.6, 0.7]: forward unstable, backward stable
    spec.stop = 0.7;
    const SweepResult result = run_sweep(spec);
    for (const SweepRow& row : result.rows) {
        REQUIRE(row.forward.has_value());
        REQUIRE_FALSE(row.forward->stable);
        REQUIRE(row.backward->stable);
        REQUIRE_FALSE(row.c_ab.has_value());
    }
    std::istringstream is(to_csv(result));
    std::string line;
    std::getline(is, line);
    std::getline(is, line);
    // stable_pos = 0, stable_neg = 1, E_ab_pos empty, E_ab_neg populated
    std::istringstream fields(line);
    std::string f;
    std::getline(fields, f, ','); // sweep_var
    REQUIRE(f == "K");
    std::getline(fields, f, ',');
    std::getline(fields, f, ',');
    REQUIRE(f == "0");
    std::getline(fields, f, ',');
    REQUIRE(f == "1");
    std::getline(fields, f, ',');
    REQUIRE(f.empty());
    std::getline(fields, f, ',');
    REQUIRE_FALSE(f.empty());
}

TEST_CASE("csv: header and float formatting") {
    REQUIRE(std::string(kCsvHeader) ==
            "sweep_var,value,stable_pos,stable_neg,E_ab_pos,E_ab_neg,E_am_pos,E_am_neg,"
            "E_mb_pos,E_mb_neg,Rmin_pos,Rmin_neg,C_ab,C_am,C_mb,C_R");
    REQUIRE(format_double(0.5) == "0.5");
    REQUIRE(format_double(1.0 / 3.0) == "0.33333333333333331");
    const double x = 0.012273871406138791;
    REQUIRE(std::stod(format_double(x)) == x); // 17 digits round-trip
}

TEST_CASE("config: parsing, overrides, and errors") {
    std::istringstream in(
        "# working point\n"
        "kappa_a = 0.3\n"
        "K = 0.25   # signed\n"
        "Delta_m = -0.8\n"
        "Delta_a_tilde = 0.9\n"
        "temperature = 0.02\n"
        "omega_b = 6.0e7\n");
    const SystemParams p = load_config(in);
    REQUIRE(p.kappa_a == 0.3);
    REQUIRE(p.kerr == 0.25);
    REQUIRE(p.delta_m == -0.8);
    REQUIRE(p.delta_a == 0.9);
    REQUIRE(p.temperature == 0.02);
    REQUIRE(p.omega_b_abs == 6.0e7);
    REQUIRE(p.g_m == 0.5); // untouched default

    std::istringstream bad_key("omega_q = 1.0\n");
    REQUIRE_THROWS_AS(load_config(bad_key), std::invalid_argument);
    std::istringstream bad_value("kappa_a = fast\n");
    REQUIRE_THROWS_AS(load_config(bad_value), std::invalid_argument);
    std::istringstream no_eq("kappa_a 0.4\n");
    REQUIRE_THROWS_AS(load_config(no_eq), std::invalid_argument);
    REQUIRE_THROWS_AS(load_config_file("/nonexistent/params.txt"), std::invalid_argument);
}

TEST_CASE("fig2 sweep: E_am peaks in the interior and the directions differ") {
    SweepSpec spec = figure_preset("fig2");
    spec.count = 101;
    const SweepResult result = run_sweep(spec);
    auto argmax = [&](auto get) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < result.rows.size(); ++i)
            if (get(result.rows[i]) > get(result.rows[best]))
                best = i;
        return best;
    };
    const std::size_t peak_pos = argmax([](const SweepRow& r) { return r.forward->measures->e_am; });
    const std::size_t peak_neg = argmax([](const SweepRow& r) { return r.backward->measures->e_am; });
    REQUIRE(peak_pos > 0);
    REQUIRE(peak_pos < result.rows.size() - 1);
    // the reversed-field curve is still rising at the right edge of this window
    REQUIRE(peak_neg == result.rows.size() - 1);
    REQUIRE(result.rows[peak_pos].forward->measures->e_am !=
            result.rows[peak_pos].backward->measures->e_am);

    bool rmin_positive_near_resonance = false;
    for (const SweepRow& row : result.rows)
        if (std::abs(row.value + 1.0) < 0.05 && row.forward->measures->r_min > 0.0)
            rmin_positive_near_resonance = true;
    REQUIRE(rmin_positive_near_resonance);
}

TEST_CASE("fig2 sweep: negativities are continuous along the grid") {
    const SweepResult result = run_sweep(figure_preset("fig2")); // spacing 0.01
    auto check_steps = [&](auto get) {
        for (std::size_t i = 1; i < result.rows.size(); ++i)
            REQUIRE(std::abs(get(result.rows[i]) - get(result.rows[i - 1])) < 0.1);
    };
    check_steps([](const SweepRow& r) { return r.forward->measures->e_ab; });
    check_steps([](const SweepRow& r) { return r.backward->measures->e_ab; });
    check_steps([](const SweepRow& r) { return r.forward->measures->e_am; });
    check_steps([](const SweepRow& r) { return r.backward->measures->e_am; });
    check_steps([](const SweepRow& r) { return r.forward->measures->e_mb; });
    check_steps([](const SweepRow& r) { return r.backward->measures->e_mb; });
}

TEST_CASE("fig3 sweep: both directions coincide at the K = 0 end") {
    SweepSpec spec = figure_preset("fig3");
    spec.count = 21;
    const SweepResult result = run_sweep(spec);
    REQUIRE(result.rows.front().value == 0.0);
    REQUIRE(result.rows.front().forward->measures->e_ab ==
            result.rows.front().backward->measures->e_ab);
    REQUIRE(*result.rows.front().c_ab == 0.0);
}

TEST_CASE("point report: text and json carry the diagnostics") {
    const SystemParams p;
    const BidirectionalReport rep = evaluate_point(p);
    const std::string text = point_report_text(p, rep);
    REQUIRE(text.find("spectral abscissa") != std::string::npos);
    REQUIRE(text.find("lyapunov residual") != std::string::npos);
    REQUIRE(text.find("E_ab") != std::string::npos);
    REQUIRE(text.find("C_R") != std::string::npos);

    const nlohmann::json j = point_report_json(p, rep);
    REQUIRE(j["forward"]["stable"].get<bool>());
    REQUIRE(j["forward"]["E_am"].get<double>() == rep.forward.measures->e_am);
    REQUIRE(j["contrast"]["C_mb"].get<double>() == *rep.c_mb);
    REQUIRE(j["params"]["K"].get<double>() == 0.4);

    SystemParams unstable = p;
    unstable.kerr = 0.6;
    const BidirectionalReport rep2 = evaluate_point(unstable);
    const nlohmann::json j2 = point_report_json(unstable, rep2);
    REQUIRE(j2["forward"]["E_ab"].is_null());
    REQUIRE(j2["contrast"]["C_ab"].is_null());
}
