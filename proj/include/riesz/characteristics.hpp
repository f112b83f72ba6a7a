#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "riesz/initial_data.hpp"
#include "riesz/kernel.hpp"
#include "riesz/meanfield.hpp"
#include "riesz/vec.hpp"

namespace riesz {

/// verlet: kick-drift-kick, one field evaluation per step.
/// yoshida4: fourth-order symmetric composition of drift-kick-drift, three evaluations per step.
enum class Integrator { verlet, yoshida4 };

/// How positions are reconstructed between stored snapshots when tracing through a history.
/// quintic uses X, V and E = dV/dt at both ends; linear uses X only.
enum class HistoryInterp { linear, quintic };

struct TimeSchedule {
    double t_final = 1000.0;
    int unit_snapshots = 10;      ///< uniform snapshots on [0, 1]
    double ratio = 1.25;          ///< geometric ratio after t = 1 (adjusted so the last snapshot is t_final)
    double dt_base = 0.03;        ///< step is dt_base * max(1, t)
    Integrator integrator = Integrator::yoshida4;
    double max_velocity_drift = 0.5;  ///< abort bound on |V_i(t) - v_i(0)|

    void validate() const;
    std::vector<double> snapshot_times() const;
    /// Number of equal substeps between consecutive snapshots.
    std::vector<int> substeps() const;
    /// Every step boundary from 0 to t_final; contains every snapshot time exactly.
    std::vector<double> step_times() const;
};

struct FlowState {
    double t = 0.0;
    std::vector<Vec3> X;
    std::vector<Vec3> V;
};

struct FlowHistory {
    RieszParams params;
    TimeSchedule schedule;
    std::vector<double> w;
    std::vector<FlowState> snaps;
    std::vector<std::vector<Vec3>> E;  ///< node fields (self-excluded) at each snapshot

    std::size_t size() const { return w.size(); }
    std::vector<double> times() const;
    double t_final() const { return snaps.empty() ? 0.0 : snaps.back().t; }
    /// Index of the snapshot at exactly time t; throws std::out_of_range otherwise.
    std::size_t index_of(double t) const;
    /// Y_i = X_i - t V_i at snapshot k.
    std::vector<Vec3> Y(std::size_t k) const;
};

struct FlowAborted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// E at the given positions at time t. For the ensemble itself this is the self-excluded node field.
using FieldFn = std::function<void(double t, std::span<const Vec3> x, std::vector<Vec3>& out)>;

/// One step of length dt (negative dt steps backwards). Throws FlowAborted on non-finite state.
FlowState step(const FlowState& s, double dt, const FieldFn& field, Integrator integrator = Integrator::verlet);

struct EvolveStats {
    std::vector<double> energy;        ///< per snapshot
    std::vector<Vec3> momentum;        ///< per snapshot
    double max_velocity_drift = 0.0;
    double initial_max_field = 0.0;    ///< max node |E(0)|
    bool smallness_warning = false;    ///< max |E(0)| * 1 not well below the velocity spacing
    std::size_t field_evaluations = 0;
};

struct EvolveOptions {
    bool track_energy = true;
    double velocity_spacing = 0.0;     ///< for the smallness sanity check; 0 disables it
};

/// Integrates the self-consistent flow and stores snapshots on the schedule's grid.
FlowHistory evolve(const Ensemble& ens, const TimeSchedule& schedule, const FieldSolver& solver,
                   EvolveStats* stats = nullptr, const EvolveOptions& opts = {});

/// Total energy sum w|V|^2/2 + 1/2 sum_{i != j} w_i w_j potential(X_i - X_j).
double total_energy(const RieszParams& params, std::span<const Vec3> x, std::span<const Vec3> v,
                    std::span<const double> w, int threads = 1);

struct PhasePoint {
    Vec3 x{};
    Vec3 v{};
};

/// The field of a stored history at arbitrary times, evaluated by summing the kernel over
/// reconstructed particle positions.
class HistoryField {
public:
    HistoryField(const FlowHistory& h, HistoryInterp interp = HistoryInterp::quintic, int threads = 1);

    void positions_at(double t, std::vector<Vec3>& out) const;
    void field(double t, std::span<const Vec3> points, std::vector<Vec3>& out) const;
    const FlowHistory& history() const { return h_; }

private:
    const FlowHistory& h_;
    HistoryInterp interp_;
    int threads_;
};

/// Integrates test points forward from time 0 through the history field on the schedule's step
/// grid. If `record` is given it receives the states at every snapshot time up to t_end.
std::vector<PhasePoint> trace_forward(const HistoryField& hf, std::span<const PhasePoint> seeds, double t_end,
                                      std::vector<std::vector<PhasePoint>>* record = nullptr);

/// Integrates points backward from time t to time 0 on the same step grid (the backward
/// Hamiltonian ODE). Throws std::out_of_range if t exceeds the history.
std::vector<PhasePoint> backward_trace_batch(const HistoryField& hf, double t, std::span<const PhasePoint> points);
PhasePoint backward_trace(const HistoryField& hf, double t, const PhasePoint& point);

/// |det J - 1| for the finite-difference Jacobian of the time-t flow map at the seed.
/// `axis_order` permutes the six phase-space coordinates before differencing.
double liouville_check(const HistoryField& hf, double t, const PhasePoint& seed, double delta,
                       const std::array<int, 6>& axis_order = {0, 1, 2, 3, 4, 5});

/// Determinant of a dense n x n row-major matrix by LU with partial pivoting.
double determinant(std::vector<double> a, std::size_t n);

/// Binary history: magic, N, snapshot count, weights, then per snapshot t, X, V, E.
void write_history(const FlowHistory& h, const std::filesystem::path& path);
/// Reads the arrays back; params and schedule are restored by the caller from metadata.
FlowHistory read_history(const std::filesystem::path& path);

}  // namespace riesz
