#include "spincoh/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace spincoh {

namespace {

constexpr double kSpotCoherenceTol = 1e-9;
constexpr double kSpotStateTol = 1e-10;
constexpr unsigned kSpotCheckSeed = 0x5eedc0deu;
constexpr int kSpotCheckSamples = 10;

struct PointParams {
    ModelSpec model;
    double temperature;
};

void apply_parameter(PointParams& p, SweepParameter param, double value) {
    switch (param) {
        case SweepParameter::Temperature: p.temperature = value; break;
        case SweepParameter::Jx: p.model.jx = value; break;
        case SweepParameter::Jy: p.model.jy = value; break;
        case SweepParameter::Jz: p.model.jz = value; break;
        case SweepParameter::Dx: p.model.dx = value; break;
        case SweepParameter::Dy: p.model.dy = value; break;
        case SweepParameter::Dz: p.model.dz = value; break;
        case SweepParameter::JAll:
            p.model.jx = p.model.jy = p.model.jz = value;
            break;
    }
}

bool sweeps(const SweepSpec& spec, SweepParameter param) {
    return std::any_of(spec.axes.begin(), spec.axes.end(),
                       [param](const SweepAxis& a) { return a.param == param; });
}

TwoSiteCouplings to_two_site(const ModelSpec& model, DmAxis axis) {
    TwoSiteCouplings c;
    c.jx = model.jx;
    c.jy = model.jy;
    c.jz = model.jz;
    c.d_axis = axis;
    c.d_mag = axis == DmAxis::X ? model.dx : axis == DmAxis::Y ? model.dy : model.dz;
    return c;
}

void check_analytic_model(const ModelSpec& model, DmAxis axis, const char* engine_name) {
    if (model.n_sites != 2 || model.boundary != Boundary::Open)
        throw std::invalid_argument(std::string(engine_name) +
                                    " engine requires the two-site Open (single-bond) model");
    const double off1 = axis == DmAxis::Z ? model.dx : model.dz;
    const double off2 = axis == DmAxis::Z ? model.dy : axis == DmAxis::Y ? model.dx : model.dy;
    if (off1 != 0.0 || off2 != 0.0)
        throw std::invalid_argument(std::string(engine_name) +
                                    " engine requires the DM vector on its own axis only");
}

DensityMatrix make_thermal_state(const ModelSpec& model, ThermalParams t, Engine engine) {
    switch (engine) {
        case Engine::AnalyticDz:
            check_analytic_model(model, DmAxis::Z, "AnalyticDz");
            return thermal_state_dz_analytic(to_two_site(model, DmAxis::Z), t);
        case Engine::AnalyticDy:
            check_analytic_model(model, DmAxis::Y, "AnalyticDy");
            return thermal_state_dy_analytic(to_two_site(model, DmAxis::Y), t);
        case Engine::Numeric:
            break;
    }
    return gibbs_state(build_chain_hamiltonian(model), t);
}

double make_partition_function(const ModelSpec& model, ThermalParams t, Engine engine) {
    switch (engine) {
        case Engine::AnalyticDz:
            return partition_function_dz(to_two_site(model, DmAxis::Z), t);
        case Engine::AnalyticDy:
            return partition_function_dy(to_two_site(model, DmAxis::Y), t);
        case Engine::Numeric:
            break;
    }
    return partition_function_numeric(build_chain_hamiltonian(model), t);
}

ResultRow make_row(const PointParams& p, MeasurementBasis basis, const PointResult& result) {
    ResultRow row;
    row.temperature = p.temperature;
    row.jx = p.model.jx;
    row.jy = p.model.jy;
    row.jz = p.model.jz;
    row.dx = p.model.dx;
    row.dy = p.model.dy;
    row.dz = p.model.dz;
    row.basis = basis;
    row.coherence_total = result.report.total;
    row.coherence_local = result.report.local;
    row.coherence_correlated = result.report.correlated;
    row.entropy_rho = result.report.entropy_rho;
    row.partition_function = result.partition_function;
    return row;
}

std::string format_double(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

[[noreturn]] void unknown_name(const std::string& kind, const std::string& name,
                               const std::vector<std::string>& valid) {
    std::ostringstream msg;
    msg << "unknown " << kind << " '" << name << "'; valid values:";
    for (const auto& v : valid) msg << " " << v;
    throw std::invalid_argument(msg.str());
}

}  // namespace

const char* to_string(SweepParameter p) {
    switch (p) {
        case SweepParameter::Temperature: return "temperature";
        case SweepParameter::Jx: return "jx";
        case SweepParameter::Jy: return "jy";
        case SweepParameter::Jz: return "jz";
        case SweepParameter::Dx: return "dx";
        case SweepParameter::Dy: return "dy";
        case SweepParameter::Dz: return "dz";
        case SweepParameter::JAll: return "j";
    }
    return "?";
}

const char* to_string(Engine e) {
    switch (e) {
        case Engine::AnalyticDz: return "AnalyticDz";
        case Engine::AnalyticDy: return "AnalyticDy";
        case Engine::Numeric: return "Numeric";
    }
    return "?";
}

const char* to_string(TableFormat f) { return f == TableFormat::Csv ? "CSV" : "JSON"; }

const char* to_string(Boundary b) { return b == Boundary::Periodic ? "periodic" : "open"; }

SweepParameter sweep_parameter_from_string(const std::string& name) {
    static const std::vector<std::pair<std::string, SweepParameter>> table = {
        {"temperature", SweepParameter::Temperature},
        {"jx", SweepParameter::Jx}, {"jy", SweepParameter::Jy}, {"jz", SweepParameter::Jz},
        {"dx", SweepParameter::Dx}, {"dy", SweepParameter::Dy}, {"dz", SweepParameter::Dz},
        {"j", SweepParameter::JAll},
    };
    for (const auto& entry : table)
        if (entry.first == name) return entry.second;
    std::vector<std::string> names;
    for (const auto& entry : table) names.push_back(entry.first);
    unknown_name("sweep parameter", name, names);
}

Engine engine_from_string(const std::string& name) {
    if (name == "AnalyticDz" || name == "analytic-dz") return Engine::AnalyticDz;
    if (name == "AnalyticDy" || name == "analytic-dy") return Engine::AnalyticDy;
    if (name == "Numeric" || name == "numeric") return Engine::Numeric;
    unknown_name("engine", name, {"AnalyticDz", "AnalyticDy", "Numeric"});
}

TableFormat table_format_from_string(const std::string& name) {
    if (name == "CSV" || name == "csv") return TableFormat::Csv;
    if (name == "JSON" || name == "json") return TableFormat::Json;
    unknown_name("output format", name, {"CSV", "JSON"});
}

Boundary boundary_from_string(const std::string& name) {
    if (name == "periodic" || name == "Periodic") return Boundary::Periodic;
    if (name == "open" || name == "Open") return Boundary::Open;
    unknown_name("boundary", name, {"periodic", "open"});
}

double SweepAxis::value(int i) const {
    if (count == 1) return start;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
}

void SweepSpec::validate() const {
    if (model.n_sites < 2 || model.n_sites > kMaxSites)
        throw std::invalid_argument("SweepSpec: n_sites must be between 2 and 12");
    if (axes.empty() || axes.size() > 2)
        throw std::invalid_argument("SweepSpec: exactly 1 or 2 axes required");
    for (const SweepAxis& a : axes) {
        if (a.count < 2) throw std::invalid_argument("SweepSpec: axis count must be >= 2");
        if (!(a.start < a.stop))
            throw std::invalid_argument("SweepSpec: axis start must be < stop");
        if (a.param == SweepParameter::Temperature && a.start <= 0.0)
            throw std::invalid_argument("SweepSpec: temperatures must be > 0");
    }
    if (axes.size() == 2 && axes[0].param == axes[1].param)
        throw std::invalid_argument("SweepSpec: the two axes must sweep different parameters");
    if (!sweeps(*this, SweepParameter::Temperature) && temperature <= 0.0)
        throw std::invalid_argument("SweepSpec: fixed temperature must be > 0");
    if (precision < 1 || precision > 17)
        throw std::invalid_argument("SweepSpec: precision must be between 1 and 17");

    if (engine != Engine::Numeric) {
        const DmAxis axis = engine == Engine::AnalyticDz ? DmAxis::Z : DmAxis::Y;
        const char* name = to_string(engine);
        check_analytic_model(model, axis, name);
        const bool sweeps_forbidden_dm =
            (axis == DmAxis::Z && (sweeps(*this, SweepParameter::Dx) ||
                                   sweeps(*this, SweepParameter::Dy))) ||
            (axis == DmAxis::Y && (sweeps(*this, SweepParameter::Dx) ||
                                   sweeps(*this, SweepParameter::Dz)));
        if (sweeps_forbidden_dm)
            throw std::invalid_argument(std::string(name) +
                                        " engine cannot sweep a DM component off its axis");
    }
}

const std::vector<std::string>& ResultTable::columns() {
    static const std::vector<std::string> cols = {
        "temperature", "jx", "jy", "jz", "dx", "dy", "dz", "basis",
        "coherence_total", "coherence_local", "coherence_correlated",
        "entropy_rho", "partition_function"};
    return cols;
}

PointResult run_point(const ModelSpec& model, double temperature, MeasurementBasis basis,
                      Engine engine) {
    const ThermalParams t(temperature);
    PointResult out;
    const DensityMatrix rho = make_thermal_state(model, t, engine);
    out.report = coherence_report(rho, basis);
    out.partition_function = make_partition_function(model, t, engine);
    return out;
}

ResultTable run_sweep(const SweepSpec& spec, int n_threads) {
    spec.validate();

    const int outer = spec.axes[0].count;
    const int inner = spec.axes.size() == 2 ? spec.axes[1].count : 1;
    const int total = outer * inner;

    auto params_at = [&spec, inner](int index) {
        PointParams p{spec.model, spec.temperature};
        apply_parameter(p, spec.axes[0].param, spec.axes[0].value(index / inner));
        if (spec.axes.size() == 2)
            apply_parameter(p, spec.axes[1].param, spec.axes[1].value(index % inner));
        return p;
    };

    ResultTable table;
    table.rows.resize(static_cast<std::size_t>(total));

    int workers = n_threads > 0 ? n_threads
                                : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::clamp(workers, 1, total);

    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&](int first, int last) {
        try {
            for (int i = first; i < last; ++i) {
                const PointParams p = params_at(i);
                const PointResult r = run_point(p.model, p.temperature, spec.basis, spec.engine);
                table.rows[static_cast<std::size_t>(i)] = make_row(p, spec.basis, r);
            }
        } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    if (workers == 1) {
        work(0, total);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int first = w * chunk;
            const int last = std::min(total, first + chunk);
            if (first < last) pool.emplace_back(work, first, last);
        }
        for (std::thread& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    if (spec.engine != Engine::Numeric) {
        // fixed-seed spot check: the analytic path must match the numeric one
        std::mt19937 rng(kSpotCheckSeed);
        std::uniform_int_distribution<int> pick(0, total - 1);
        const int samples = std::min(kSpotCheckSamples, total);
        for (int s = 0; s < samples; ++s) {
            const PointParams p = params_at(pick(rng));
            const ThermalParams t(p.temperature);
            const DensityMatrix analytic = make_thermal_state(p.model, t, spec.engine);
            const DensityMatrix numeric = make_thermal_state(p.model, t, Engine::Numeric);
            const double state_diff =
                (analytic.matrix() - numeric.matrix()).cwiseAbs().maxCoeff();
            const double c_analytic = coherence(analytic, spec.basis);
            const double c_numeric = coherence(numeric, spec.basis);
            if (state_diff > kSpotStateTol ||
                std::abs(c_analytic - c_numeric) > kSpotCoherenceTol) {
                std::ostringstream msg;
                msg << "run_sweep: analytic and numeric engines disagree (state diff "
                    << state_diff << ", coherence diff " << std::abs(c_analytic - c_numeric)
                    << ")";
                throw contract_error(msg.str());
            }
        }
    }
    return table;
}

std::string format_table_csv(const ResultTable& table, int precision) {
    std::ostringstream out;
    const auto& cols = ResultTable::columns();
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out << ',';
        out << cols[i];
    }
    out << '\n';
    for (const ResultRow& r : table.rows) {
        out << format_double(r.temperature, precision) << ','
            << format_double(r.jx, precision) << ',' << format_double(r.jy, precision) << ','
            << format_double(r.jz, precision) << ',' << format_double(r.dx, precision) << ','
            << format_double(r.dy, precision) << ',' << format_double(r.dz, precision) << ','
            << to_string(r.basis) << ',' << format_double(r.coherence_total, precision) << ','
            << format_double(r.coherence_local, precision) << ','
            << format_double(r.coherence_correlated, precision) << ','
            << format_double(r.entropy_rho, precision) << ','
            << format_double(r.partition_function, precision) << '\n';
    }
    return out.str();
}

std::string format_table_json(const ResultTable& table, int precision) {
    std::ostringstream out;
    out << "[\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const ResultRow& r = table.rows[i];
        out << "  {\"temperature\": " << format_double(r.temperature, precision)
            << ", \"jx\": " << format_double(r.jx, precision)
            << ", \"jy\": " << format_double(r.jy, precision)
            << ", \"jz\": " << format_double(r.jz, precision)
            << ", \"dx\": " << format_double(r.dx, precision)
            << ", \"dy\": " << format_double(r.dy, precision)
            << ", \"dz\": " << format_double(r.dz, precision)
            << ", \"basis\": \"" << to_string(r.basis) << '"'
            << ", \"coherence_total\": " << format_double(r.coherence_total, precision)
            << ", \"coherence_local\": " << format_double(r.coherence_local, precision)
            << ", \"coherence_correlated\": " << format_double(r.coherence_correlated, precision)
            << ", \"entropy_rho\": " << format_double(r.entropy_rho, precision)
            << ", \"partition_function\": " << format_double(r.partition_function, precision)
            << '}' << (i + 1 < table.rows.size() ? "," : "") << '\n';
    }
    out << "]\n";
    return out.str();
}

void write_table(const ResultTable& table, TableFormat format, const std::string& path,
                 int precision) {
    const std::string text = format == TableFormat::Csv ? format_table_csv(table, precision)
                                                        : format_table_json(table, precision);
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw io_error("write_table: failed writing to stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("write_table: cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw io_error("write_table: failed writing to '" + path + "'");
}

ResultTable read_table_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("read_table_csv: empty input");
    {
        std::ostringstream expected;
        const auto& cols = ResultTable::columns();
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (i) expected << ',';
            expected << cols[i];
        }
        if (line != expected.str())
            throw std::invalid_argument("read_table_csv: unexpected header '" + line + "'");
    }
    ResultTable table;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != ResultTable::columns().size())
            throw std::invalid_argument("read_table_csv: malformed row '" + line + "'");
        ResultRow r;
        r.temperature = std::stod(fields[0]);
        r.jx = std::stod(fields[1]);
        r.jy = std::stod(fields[2]);
        r.jz = std::stod(fields[3]);
        r.dx = std::stod(fields[4]);
        r.dy = std::stod(fields[5]);
        r.dz = std::stod(fields[6]);
        r.basis = basis_from_string(fields[7]);
        r.coherence_total = std::stod(fields[8]);
        r.coherence_local = std::stod(fields[9]);
        r.coherence_correlated = std::stod(fields[10]);
        r.entropy_rho = std::stod(fields[11]);
        r.partition_function = std::stod(fields[12]);
        table.rows.push_back(r);
    }
    return table;
}

ResultTable read_table_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("read_table_csv: cannot open '" + path + "'");
    return read_table_csv(in);
}

SweepSpec parse_sweep_config(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("sweep config: invalid JSON: ") + e.what());
    }
    SweepSpec spec;
    try {
        if (j.contains("model")) {
            const auto& m = j.at("model");
            spec.model.n_sites = m.value("n", 2);
            spec.model.boundary = boundary_from_string(m.value("boundary", "open"));
            spec.model.jx = m.value("jx", 0.0);
            spec.model.jy = m.value("jy", 0.0);
            spec.model.jz = m.value("jz", 0.0);
            spec.model.dx = m.value("dx", 0.0);
            spec.model.dy = m.value("dy", 0.0);
            spec.model.dz = m.value("dz", 0.0);
        }
        if (j.contains("fixed")) spec.temperature = j.at("fixed").value("temperature", 1.0);
        if (j.contains("axes")) {
            for (const auto& a : j.at("axes")) {
                SweepAxis axis;
                axis.param = sweep_parameter_from_string(a.at("param").get<std::string>());
                axis.start = a.at("start").get<double>();
                axis.stop = a.at("stop").get<double>();
                axis.count = a.at("count").get<int>();
                spec.axes.push_back(axis);
            }
        }
        if (j.contains("basis")) spec.basis = basis_from_string(j.at("basis").get<std::string>());
        if (j.contains("engine")) spec.engine = engine_from_string(j.at("engine").get<std::string>());
        if (j.contains("output"))
            spec.output = table_format_from_string(j.at("output").get<std::string>());
        if (j.contains("precision")) spec.precision = j.at("precision").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("sweep config: ") + e.what());
    }
    return spec;
}

namespace {

SweepAxis axis(SweepParameter p, double start, double stop, int count) {
    return SweepAxis{p, start, stop, count};
}

ModelSpec two_site_model(double jx, double jy, double jz, double dx, double dy, double dz) {
    ModelSpec m;
    m.n_sites = 2;
    m.boundary = Boundary::Open;
    m.jx = jx; m.jy = jy; m.jz = jz;
    m.dx = dx; m.dy = dy; m.dz = dz;
    return m;
}

// Caption-stated couplings; unstated grid choices (documented in the README):
// 50 points per swept axis, temperature panels {0.5, 1.0, 1.5, 2.0}, sweep
// ranges [0.1, 5] for T, [-2, 4] for swept Jz (and the swept J of the
// XXZ/XXX panels), [-4, 4] for other swept couplings, [0, 5] for DM
// magnitudes; the fig1a/fig3a curve families use {-1, 0, 1, 2}. The family
// ("for different ...") axis is the outer axis so each curve is contiguous
// in the output.
SweepSpec build_preset(std::string_view name) {
    constexpr int kN = 50;
    const SweepAxis t_sweep = axis(SweepParameter::Temperature, 0.1, 5.0, kN);
    const SweepAxis t_family = axis(SweepParameter::Temperature, 0.5, 2.0, 4);

    SweepSpec s;
    s.basis = MeasurementBasis::Z;
    s.output = TableFormat::Csv;

    if (name == "fig1a") {
        s.model = two_site_model(-1, -0.5, 0, 0, 0, 1);
        s.axes = {axis(SweepParameter::Jz, -1, 2, 4), t_sweep};
        s.engine = Engine::AnalyticDz;
    } else if (name == "fig1b") {
        s.model = two_site_model(-1, -0.5, 0, 0, 0, 1);
        s.axes = {t_family, axis(SweepParameter::Jz, -2, 4, kN)};
        s.engine = Engine::AnalyticDz;
    } else if (name == "fig1c") {
        s.model = two_site_model(0, -0.5, -1, 0, 0, 1);
        s.axes = {t_family, axis(SweepParameter::Jx, -4, 4, kN)};
        s.engine = Engine::AnalyticDz;
    } else if (name == "fig1d") {
        s.model = two_site_model(-1, -0.5, 0.2, 0, 0, 0);
        s.axes = {t_family, axis(SweepParameter::Dz, 0, 5, kN)};
        s.engine = Engine::AnalyticDz;
    } else if (name == "fig2a") {
        s.model = two_site_model(-1, -1, 0, 0, 0, 1);
        s.axes = {t_family, axis(SweepParameter::Jz, -2, 4, kN)};
        s.engine = Engine::AnalyticDz;
    } else if (name == "fig2b") {
        s.model = two_site_model(-1, -1, 1, 0, 0, 0);
        s.axes = {t_family, axis(SweepParameter::Dz, 0, 5, kN)};
        s.engine = Engine::AnalyticDz;
    } else if (name == "fig3a") {
        s.model = two_site_model(-1, 0, -0.5, 0, 1, 0);
        s.axes = {axis(SweepParameter::Jy, -1, 2, 4), t_sweep};
        s.engine = Engine::AnalyticDy;
    } else if (name == "fig3b") {
        s.model = two_site_model(-1, 0, -0.5, 0, 1, 0);
        s.axes = {t_family, axis(SweepParameter::Jy, -4, 4, kN)};
        s.engine = Engine::AnalyticDy;
    } else if (name == "fig3c") {
        s.model = two_site_model(0, 0.2, -0.5, 0, 1, 0);
        s.axes = {t_family, axis(SweepParameter::Jx, -4, 4, kN)};
        s.engine = Engine::AnalyticDy;
    } else if (name == "fig3d") {
        s.model = two_site_model(-1, 0.2, -0.5, 0, 0, 0);
        s.axes = {t_family, axis(SweepParameter::Dy, 0, 5, kN)};
        s.engine = Engine::AnalyticDy;
    } else if (name == "fig5a") {
        s.model = two_site_model(-1, -1, 0, 1, 0, 0);
        s.axes = {t_family, axis(SweepParameter::Jz, -2, 4, kN)};
        s.engine = Engine::Numeric;
    } else if (name == "fig5b") {
        s.model = two_site_model(-1, -1, 1, 0, 0, 0);
        s.axes = {t_family, axis(SweepParameter::Dx, 0, 5, kN)};
        s.engine = Engine::Numeric;
    } else if (name == "fig5c") {
        s.model = two_site_model(0, 0, 0, 1, 0, 0);
        s.axes = {t_family, axis(SweepParameter::JAll, -2, 4, kN)};
        s.engine = Engine::Numeric;
    } else if (name == "fig5d") {
        s.model = two_site_model(-1, -1, -1, 0, 0, 0);
        s.axes = {t_family, axis(SweepParameter::Dx, 0, 5, kN)};
        s.engine = Engine::Numeric;
    } else if (name == "fig6a" || name == "fig6b") {
        s.model = two_site_model(-1, -0.5, 0, 0, 0, 1);
        s.axes = {axis(SweepParameter::Jz, -2, 4, kN), t_sweep};
        s.engine = Engine::AnalyticDz;
        s.basis = name == "fig6b" ? MeasurementBasis::X : MeasurementBasis::Z;
    } else if (name == "fig7a") {
        s.model = two_site_model(-1, -0.5, 0, 0, 0, 0);
        s.temperature = 2.5;
        s.axes = {axis(SweepParameter::Jz, -2, 4, kN), axis(SweepParameter::Dz, 0, 5, kN)};
        s.engine = Engine::AnalyticDz;
        s.basis = MeasurementBasis::X;
    } else if (name == "fig7b") {
        s.model = two_site_model(0, -0.5, -1, 0, 0, 0);
        s.temperature = 2.5;
        s.axes = {axis(SweepParameter::Jx, -2, 4, kN), axis(SweepParameter::Dx, 0, 5, kN)};
        s.engine = Engine::Numeric;
        s.basis = MeasurementBasis::Z;
    } else {
        unknown_name("figure preset", std::string(name), figure_preset_names());
    }
    return s;
}

}  // namespace

const std::vector<std::string>& figure_preset_names() {
    static const std::vector<std::string> names = {
        "fig1a", "fig1b", "fig1c", "fig1d", "fig2a", "fig2b",
        "fig3a", "fig3b", "fig3c", "fig3d", "fig5a", "fig5b",
        "fig5c", "fig5d", "fig6a", "fig6b", "fig7a", "fig7b"};
    return names;
}

SweepSpec figure_preset(std::string_view name) {
    SweepSpec spec = build_preset(name);
    spec.validate();
    return spec;
}

}  // namespace spincoh
