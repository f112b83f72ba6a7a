#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "riesz/analysis.hpp"
#include "riesz/characteristics.hpp"
#include "riesz/initial_data.hpp"
#include "riesz/kernel.hpp"
#include "riesz/meanfield.hpp"
#include "riesz/scattering.hpp"

namespace riesz {

struct ProbeSettings {
    std::size_t max_node_probes = 1000;
    int grid_per_axis = 8;
    /// Hessian difference step at time t is fd_step * max(1, t).
    double fd_step = 1e-3;
};

/// Everything a run needs. Parsed from a TOML-style file:
///
///   [kernel] alpha, lambda, eps ("auto" = eps_factor * position node spacing), eps_factor
///   [data] eta ("auto" = scaled so the weighted smallness total equals smallness), smallness, sigma_x, sigma_v
///   [quadrature] radius_x, radius_v, n_x, n_v, rule, offsets, max_nodes
///   [schedule] t_final, unit_snapshots, ratio, dt_base, integrator, max_velocity_drift
///   [tree] mode, theta, leaf_size, expansion
///   [probes] max_node_probes, grid_per_axis, fd_step
///   [seeds] n_pos, n_vel, radius
///   [diagnostics] velocity_grid, velocity_radius, all_times, interp
///   [tolerances] one key per Tolerances field
///   top level: seed, threads, run_id, output_dir
struct RunConfig {
    RieszParams kernel;
    bool eps_auto = true;
    double eps_factor = 0.5;

    GaussianData data;
    bool eta_auto = true;
    double smallness = 0.01;

    QuadratureSpec quadrature;
    TimeSchedule schedule;
    FieldMode mode = FieldMode::direct;
    TreeParams tree;
    ProbeSettings probes;
    SeedGrid seeds;
    int velocity_grid = 5;
    double velocity_radius = 2.0;
    bool all_times = false;
    HistoryInterp interp = HistoryInterp::quintic;
    Tolerances tolerances;

    std::uint64_t seed = 20240601;
    int threads = 0;  ///< 0: environment, then hardware
    std::string run_id = "default";
    std::string output_dir = "runs/default";

    /// Text the config was parsed from (empty for programmatic configs).
    std::string source;

    /// Throws std::invalid_argument.
    void validate() const;

    /// Softening actually used (resolves "auto").
    double resolved_eps() const;
    /// Amplitude actually used (resolves "auto").
    double resolved_eta() const;
    /// Data, kernel and solver with every "auto" resolved.
    GaussianData resolved_data() const;
    RieszParams resolved_kernel() const;
    FieldSolver solver() const;
    ScatterOptions scatter_options() const;

    /// One "key = value" line per field in a fixed order, parseable by parse_config.
    std::string canonical() const;
    /// FNV-1a of the canonical form without threads, run_id and output_dir.
    std::string hash() const;
};

/// Throws std::invalid_argument with the offending line on syntax errors or unknown keys.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace riesz
