#pragma once

#include <filesystem>
#include <ostream>
#include <string>

#include "riesz/characteristics.hpp"
#include "riesz/config.hpp"

namespace riesz {

struct SimulateSummary {
    std::size_t nodes = 0;
    double eps = 0.0;
    double eta = 0.0;
    NormBundle smallness;
    EvolveStats stats;
    double seconds = 0.0;
};

/// Writes config.toml, history.bin, fields.csv (with sidecars) and run.json into cfg.output_dir.
/// Throws FlowAborted, std::invalid_argument, IoError.
SimulateSummary cmd_simulate(const RunConfig& cfg, std::ostream& log);

/// Reads history.bin from cfg.output_dir (its config hash must match cfg) and writes wave.csv,
/// residual.csv, a_t.csv and f_field.csv.
void cmd_scatter(const RunConfig& cfg, std::ostream& log);

/// Builds report.json from the tables in `run_dir`, using the config.toml stored there.
/// Returns the report text.
std::string cmd_rates(const std::filesystem::path& run_dir, std::ostream& log);

/// Loads the history of a run directory with parameters restored from its config.
FlowHistory load_run_history(const RunConfig& cfg);

/// Field sup norms at every snapshot, as written to fields.csv.
void write_fields_csv(const FlowHistory& h, const RunConfig& cfg, const std::filesystem::path& path);

}  // namespace riesz
