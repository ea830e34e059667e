// spincoh: quantum coherence of Heisenberg XYZ chains with DM interactions.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical contract
// violation, 4 I/O error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spincoh/limits.hpp"
#include "spincoh/sweep.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitContract = 3;
constexpr int kExitIo = 4;

struct ModelFlags {
    int n = 2;
    std::string boundary = "open";
    double jx = 0, jy = 0, jz = 0;
    double dx = 0, dy = 0, dz = 0;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--n", n, "number of sites");
        cmd.add_option("--boundary", boundary, "periodic or open");
        cmd.add_option("--jx", jx, "J_x coupling");
        cmd.add_option("--jy", jy, "J_y coupling");
        cmd.add_option("--jz", jz, "J_z coupling");
        cmd.add_option("--dx", dx, "DM x component");
        cmd.add_option("--dy", dy, "DM y component");
        cmd.add_option("--dz", dz, "DM z component");
    }

    spincoh::ModelSpec to_spec() const {
        spincoh::ModelSpec m;
        m.n_sites = n;
        m.boundary = spincoh::boundary_from_string(boundary);
        m.jx = jx; m.jy = jy; m.jz = jz;
        m.dx = dx; m.dy = dy; m.dz = dz;
        return m;
    }
};

std::string format_value(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

void print_model_warnings(const spincoh::ModelSpec& spec) {
    for (const std::string& w : spincoh::model_warnings(spec))
        std::cerr << "warning: " << w << "\n";
}

void emit_table(const spincoh::ResultTable& table, spincoh::TableFormat format,
                const std::string& out, int precision, double seconds) {
    spincoh::write_table(table, format, out, precision);
    std::cerr << table.rows.size() << " row(s) in " << std::fixed << std::setprecision(3)
              << seconds << " s\n";
}

int run(int argc, char** argv) {
    CLI::App app{"quantum coherence of Heisenberg XYZ chains with DM interactions"};
    app.require_subcommand(1);

    std::string out = "-";
    std::string format = "csv";
    int precision = 12;
    int threads = 0;

    // point
    auto* point = app.add_subcommand("point", "single thermal-coherence evaluation");
    ModelFlags point_model;
    point_model.add_to(*point);
    double point_temp = 1.0;
    std::string point_basis = "Z";
    std::string point_engine = "Numeric";
    point->add_option("--temp", point_temp, "temperature (k_B = 1)");
    point->add_option("--basis", point_basis, "measurement basis: Z, X or Y");
    point->add_option("--engine", point_engine, "AnalyticDz, AnalyticDy or Numeric");
    point->add_option("--out", out, "output path ('-' = stdout)");
    point->add_option("--format", format, "csv or json");
    point->add_option("--precision", precision, "significant digits");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "evaluate a parameter grid");
    ModelFlags sweep_model;
    sweep_model.add_to(*sweep);
    std::string config_path;
    std::vector<std::string> axis_specs;
    double sweep_temp = 1.0;
    std::string sweep_basis = "Z";
    std::string sweep_engine = "Numeric";
    sweep->add_option("--config", config_path, "JSON config file (flags override)");
    sweep->add_option("--axis", axis_specs,
                      "swept axis as param:start:stop:count (repeat for a second axis)");
    sweep->add_option("--temp", sweep_temp, "fixed temperature when not swept");
    sweep->add_option("--basis", sweep_basis, "measurement basis");
    sweep->add_option("--engine", sweep_engine, "evaluation engine");
    sweep->add_option("--out", out, "output path ('-' = stdout)");
    sweep->add_option("--format", format, "csv or json");
    sweep->add_option("--precision", precision, "significant digits");
    sweep->add_option("--threads", threads, "worker threads (0 = hardware)");

    // figure
    auto* figure = app.add_subcommand("figure", "run a published-figure preset grid");
    std::string figure_name;
    figure->add_option("name", figure_name, "preset name, e.g. fig1a")->required();
    figure->add_option("--out", out, "output path ('-' = stdout)");
    figure->add_option("--format", format, "csv or json");
    figure->add_option("--precision", precision, "significant digits");
    figure->add_option("--threads", threads, "worker threads (0 = hardware)");

    // limits
    auto* limits = app.add_subcommand("limits", "closed-form zero-temperature values");
    int limits_n = 2;
    limits->add_option("--n", limits_n, "even site count")->required();
    limits->add_option("--precision", precision, "significant digits");

    // chain
    auto* chain = app.add_subcommand(
        "chain", "ground-state coherence of the Jz = 0 chain vs the closed form");
    ModelFlags chain_model;
    chain_model.jx = 1.0;
    chain_model.jy = 1.0;
    chain_model.boundary = "periodic";
    chain_model.add_to(*chain);
    std::string chain_basis = "Z";
    chain->add_option("--basis", chain_basis, "measurement basis");
    chain->add_option("--precision", precision, "significant digits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*point) {
            const auto t0 = std::chrono::steady_clock::now();
            const spincoh::ModelSpec model = point_model.to_spec();
            print_model_warnings(model);
            const spincoh::PointResult r = spincoh::run_point(
                model, point_temp, spincoh::basis_from_string(point_basis),
                spincoh::engine_from_string(point_engine));
            spincoh::ResultTable table;
            spincoh::ResultRow row;
            row.temperature = point_temp;
            row.jx = model.jx; row.jy = model.jy; row.jz = model.jz;
            row.dx = model.dx; row.dy = model.dy; row.dz = model.dz;
            row.basis = r.report.basis;
            row.coherence_total = r.report.total;
            row.coherence_local = r.report.local;
            row.coherence_correlated = r.report.correlated;
            row.entropy_rho = r.report.entropy_rho;
            row.partition_function = r.partition_function;
            table.rows.push_back(row);
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
            emit_table(table, spincoh::table_format_from_string(format), out, precision,
                       dt.count());
        } else if (*sweep) {
            spincoh::SweepSpec spec;
            if (!config_path.empty()) {
                std::ifstream in(config_path, std::ios::binary);
                if (!in) throw spincoh::io_error("cannot open config '" + config_path + "'");
                std::ostringstream text;
                text << in.rdbuf();
                spec = spincoh::parse_sweep_config(text.str());
            }
            // flags the user actually passed override the config
            if (sweep->count("--n")) spec.model.n_sites = sweep_model.n;
            if (sweep->count("--boundary"))
                spec.model.boundary = spincoh::boundary_from_string(sweep_model.boundary);
            if (sweep->count("--jx")) spec.model.jx = sweep_model.jx;
            if (sweep->count("--jy")) spec.model.jy = sweep_model.jy;
            if (sweep->count("--jz")) spec.model.jz = sweep_model.jz;
            if (sweep->count("--dx")) spec.model.dx = sweep_model.dx;
            if (sweep->count("--dy")) spec.model.dy = sweep_model.dy;
            if (sweep->count("--dz")) spec.model.dz = sweep_model.dz;
            if (sweep->count("--temp")) spec.temperature = sweep_temp;
            if (sweep->count("--basis")) spec.basis = spincoh::basis_from_string(sweep_basis);
            if (sweep->count("--engine")) spec.engine = spincoh::engine_from_string(sweep_engine);
            if (sweep->count("--format"))
                spec.output = spincoh::table_format_from_string(format);
            if (sweep->count("--precision")) spec.precision = precision;
            if (!axis_specs.empty()) {
                spec.axes.clear();
                for (const std::string& text : axis_specs) {
                    std::stringstream ss(text);
                    std::string param, start, stop, count;
                    if (!std::getline(ss, param, ':') || !std::getline(ss, start, ':') ||
                        !std::getline(ss, stop, ':') || !std::getline(ss, count))
                        throw std::invalid_argument("--axis expects param:start:stop:count, got '" +
                                                    text + "'");
                    spincoh::SweepAxis a;
                    a.param = spincoh::sweep_parameter_from_string(param);
                    a.start = std::stod(start);
                    a.stop = std::stod(stop);
                    a.count = std::stoi(count);
                    spec.axes.push_back(a);
                }
            }
            print_model_warnings(spec.model);
            const auto t0 = std::chrono::steady_clock::now();
            const spincoh::ResultTable table = spincoh::run_sweep(spec, threads);
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
            emit_table(table, spec.output, out, spec.precision, dt.count());
        } else if (*figure) {
            spincoh::SweepSpec spec = spincoh::figure_preset(figure_name);
            if (figure->count("--format"))
                spec.output = spincoh::table_format_from_string(format);
            if (figure->count("--precision")) spec.precision = precision;
            const auto t0 = std::chrono::steady_clock::now();
            const spincoh::ResultTable table = spincoh::run_sweep(spec, threads);
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
            std::cerr << "preset " << figure_name << ": engine " << to_string(spec.engine)
                      << ", basis " << to_string(spec.basis) << "\n";
            emit_table(table, spec.output, out, spec.precision, dt.count());
        } else if (*limits) {
            std::cout << "n=" << limits_n << "\n"
                      << "closed_form_jz0="
                      << format_value(spincoh::coherence_closed_form_jz0(limits_n), precision)
                      << "\n"
                      << "ghz=" << format_value(spincoh::ghz_coherence(), precision) << "\n"
                      << "broken_symmetry="
                      << format_value(spincoh::broken_symmetry_coherence(), precision) << "\n";
        } else if (*chain) {
            const spincoh::ModelSpec model = chain_model.to_spec();
            print_model_warnings(model);
            const spincoh::ChainGroundCoherence r = spincoh::chain_ground_coherence(
                model, spincoh::basis_from_string(chain_basis));
            std::cout << "coherence=" << format_value(r.coherence, precision) << "\n"
                      << "closed_form=" << format_value(r.closed_form, precision) << "\n"
                      << "deviation=" << format_value(r.deviation, precision) << "\n"
                      << "energy=" << format_value(r.ground.energy, precision) << "\n"
                      << "degeneracy=" << r.ground.degeneracy << "\n";
            if (r.ground.sector) std::cout << "sector=" << *r.ground.sector << "\n";
            if (model.boundary == spincoh::Boundary::Periodic) {
                const spincoh::JwModeSet modes =
                    spincoh::jw_mode_set({model.jx, model.dz, model.n_sites});
                std::cout << "filled_modes=" << modes.filled_momenta.size() << "\n";
            }
        }
    } catch (const spincoh::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const spincoh::contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitContract;
    } catch (const spincoh::degeneracy_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitContract;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
