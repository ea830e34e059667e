#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "spincoh/coherence.hpp"
#include "spincoh/models.hpp"
#include "spincoh/thermal.hpp"

namespace spincoh {

/// Sweepable parameters. JAll sets Jx = Jy = Jz together (needed by the
/// isotropic-model presets).
enum class SweepParameter { Temperature, Jx, Jy, Jz, Dx, Dy, Dz, JAll };

enum class Engine { AnalyticDz, AnalyticDy, Numeric };

enum class TableFormat { Csv, Json };

const char* to_string(SweepParameter p);
const char* to_string(Engine e);
const char* to_string(TableFormat f);
SweepParameter sweep_parameter_from_string(const std::string& name);
Engine engine_from_string(const std::string& name);
TableFormat table_format_from_string(const std::string& name);
Boundary boundary_from_string(const std::string& name);
const char* to_string(Boundary b);

/// Inclusive linear grid over one parameter.
struct SweepAxis {
    SweepParameter param = SweepParameter::Temperature;
    double start = 0.0;
    double stop = 0.0;
    int count = 0;

    double value(int i) const;
};

/// A parameter grid: 1 or 2 swept axes over a base model, fixed temperature
/// when not swept, measurement basis, evaluation engine and output settings.
/// Row order of the resulting table is lexicographic with axes[0] outermost.
struct SweepSpec {
    ModelSpec model;
    double temperature = 1.0;  ///< fixed value when temperature is not an axis
    std::vector<SweepAxis> axes;
    MeasurementBasis basis = MeasurementBasis::Z;
    Engine engine = Engine::Numeric;
    TableFormat output = TableFormat::Csv;
    int precision = 12;  ///< significant digits when serializing

    /// Throws std::invalid_argument on any violation (axis counts >= 2,
    /// start < stop, positive temperatures, analytic engines only on the
    /// matching two-site single-bond configuration, ...).
    void validate() const;
};

struct ResultRow {
    double temperature = 0.0;
    double jx = 0.0, jy = 0.0, jz = 0.0;
    double dx = 0.0, dy = 0.0, dz = 0.0;
    MeasurementBasis basis = MeasurementBasis::Z;
    double coherence_total = 0.0;
    double coherence_local = 0.0;
    double coherence_correlated = 0.0;
    double entropy_rho = 0.0;
    double partition_function = 0.0;
};

struct ResultTable {
    std::vector<ResultRow> rows;

    static const std::vector<std::string>& columns();
};

struct PointResult {
    CoherenceReport report;
    double partition_function = 0.0;
};

/// One thermal-coherence evaluation: Gibbs state through the requested engine
/// followed by the coherence report.
PointResult run_point(const ModelSpec& model, double temperature, MeasurementBasis basis,
                      Engine engine = Engine::Numeric);

/// Evaluate every grid point (parallel map, deterministic assembly in grid
/// order). With an analytic engine, up to ten fixed-seed sample points are
/// re-evaluated numerically and must agree (coherence within 1e-9, thermal
/// state elementwise within 1e-10), else contract_error.
/// n_threads <= 0 selects the hardware concurrency.
ResultTable run_sweep(const SweepSpec& spec, int n_threads = 0);

/// Grids for the published figures (fig1a..fig1d, fig2a, fig2b,
/// fig3a..fig3d, fig5a..fig5d, fig6a, fig6b, fig7a, fig7b). Unknown names
/// raise std::invalid_argument listing the valid ones.
SweepSpec figure_preset(std::string_view name);
const std::vector<std::string>& figure_preset_names();

std::string format_table_csv(const ResultTable& table, int precision);
std::string format_table_json(const ResultTable& table, int precision);

/// Serialize to `path` ("-" = stdout). I/O failures throw io_error with the
/// path in the message.
void write_table(const ResultTable& table, TableFormat format, const std::string& path,
                 int precision);

ResultTable read_table_csv(std::istream& in);
ResultTable read_table_csv_file(const std::string& path);

/// Parse a JSON sweep configuration (see README for the schema).
SweepSpec parse_sweep_config(const std::string& json_text);

}  // namespace spincoh
