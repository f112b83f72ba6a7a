#pragma once

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "riesz/characteristics.hpp"
#include "riesz/initial_data.hpp"
#include "riesz/kernel.hpp"
#include "riesz/vec.hpp"

namespace riesz {

/// Limit of a vector series y(t) under the model y(t) = limit + c t^{-p}, fitted by least squares
/// on the snapshots with t >= t_lo (p fixed).
struct TailFit {
    Vec3 limit{};
    Vec3 coef{};
    double exponent = 0.0;     ///< the fixed p
    double r_squared = 0.0;    ///< of the vector fit of y(t) - y(T); 1 when degenerate
    Vec3 last{};
    bool degenerate = false;   ///< the tail |y(t) - y(T)| is below 1e-14 on the window
    bool unreliable = false;   ///< p < 0.1: the extrapolation is ill-conditioned
};

TailFit tail_limit(std::span<const double> t, std::span<const Vec3> y, double p, double t_lo);

/// Fit window used throughout: the last decade [T/10, T].
inline double last_decade(double t_final) { return t_final / 10.0; }

/// Evaluation points for wave operators and residuals: n_pos^3 positions times n_vel^3 velocities
/// within centre +- radius * sigma. Axis offsets follow the nested sequence 0, +1, -1, +1/2, -1/2,
/// +1/4, ... (times radius * sigma), so a larger grid contains every point of a smaller one and
/// seed ids (base-16 digits of the six axis indices) do not move when the grid grows.
struct SeedGrid {
    int n_pos = 5;
    int n_vel = 5;
    double radius = 2.0;

    static constexpr int max_per_axis = 16;

    void validate() const;
    std::vector<PhasePoint> make(const GaussianData& d) const;
    /// Stable id of each point of `make`, same order.
    std::vector<std::size_t> ids() const;
};

/// k-th offset of the nested axis sequence, in [-1, 1].
double nested_offset(int k);

/// Velocities at which A_t and A_inf are tabulated: n^3 grid on centre_v +- radius * sigma_v.
std::vector<Vec3> velocity_grid(const GaussianData& d, int n, double radius);

/// Softening used for A_t at time t: eps / max(1, t). Matches the position softening under
/// the ballistic scaling x ~ t v, and vanishes in the limit so that A_t -> A_inf (unsoftened).
double velocity_softening(double eps, double t);

/// A_t(v) = -sum_i w_i grad(v - V_i(t)).
Vec3 A_t(const RieszParams& params, const FlowState& snap, std::span<const double> w, const Vec3& v);
/// -sum_i w_i grad(v - V_plus_i), unsoftened.
Vec3 A_inf(const RieszParams& params, std::span<const Vec3> v_plus, std::span<const double> w, const Vec3& v);
/// Exact time derivative of A_t: sum_i w_i hessian(v - V_i) E(t, X_i), plus the softening drift term.
Vec3 dA_dt(const RieszParams& params, const FlowState& snap, std::span<const double> w,
           std::span<const Vec3> node_fields, const Vec3& v);
/// Jacobian d A_t / d v.
Mat3 grad_v_A(const RieszParams& params, const FlowState& snap, std::span<const double> w, const Vec3& v);

/// (t^{1-alpha} - 1) / (1 - alpha); log t at alpha = 1.
double ref_coefficient(double t, double alpha);
/// (x + t v - coef(t) a, v).
PhasePoint ref_flow(double t, const PhasePoint& p, const Vec3& a, double alpha);

struct WaveOp {
    Vec3 W1{};
    Vec3 W2{};
};
/// W1 = X - t V + coef(t) A_t(V), W2 = V, for a trajectory at time t.
WaveOp wave_op(const RieszParams& params, const FlowState& snap, std::span<const double> w, const PhasePoint& traj);

struct FValue {
    Vec3 F1{};
    Vec3 F2{};
};
/// The transport field of the modified distribution at snapshot k.
FValue F_field(const FlowHistory& h, std::size_t k, const PhasePoint& p);

struct Divergence {
    double div = 0.0;       ///< grad_x . F1 + grad_v . F2
    double scale = 0.0;     ///< |grad_x F1| + |grad_v F2| (Frobenius)
    double relative() const { return scale > 0.0 ? std::fabs(div) / scale : 0.0; }
};
/// Central differences with step h.
Divergence F_divergence(const FlowHistory& h, std::size_t k, const PhasePoint& p, double h_step = 1e-3);

/// Momentum limits of every particle in the history, from their own trajectories.
std::vector<TailFit> node_momentum_limits(const FlowHistory& h, double t_lo);

struct ScatterOptions {
    SeedGrid seeds;
    int velocity_grid = 5;
    double velocity_radius = 2.0;
    /// Residuals and g are evaluated at the snapshots in the last decade and at t = 1; with
    /// all_times every snapshot t >= 1 is used.
    bool all_times = false;
    HistoryInterp interp = HistoryInterp::quintic;
    int threads = 1;
};

struct WaveRow {
    double t;
    std::size_t seed;  ///< stable seed id
    WaveOp w;
    double wdiff1;   ///< |W1 - W1_plus| / <x>
    double diff2;    ///< |W2 - W2_plus|
};

struct ResidualRow {
    double t;
    double residual_ref;
    double residual_tilde;
    double residual_free;
    double sup_weighted_g;   ///< max over seeds of <x> g(t, x, v)
};

struct FRow {
    double t;
    double sup_f1_weighted;  ///< max over seeds of |F1| / <x>
    double sup_f2;
    double max_div_rel;      ///< max over seeds of |div F| / (|grad F1| + |grad F2|)
};

/// A_t on the velocity grid. `a_minus_inf`, `da` and `da_fd` hold the softening at its value
/// eps/t for this row; the full derivative is da + da_softening.
struct ARow {
    double t;
    std::size_t v_id;
    Vec3 a{};
    Vec3 da{};               ///< from the motion of the particle velocities
    Vec3 da_softening{};     ///< from d(eps/t)/dt
    double a_minus_inf;      ///< |A_t - A_inf|, both at softening eps/t
    Vec3 da_fd{};            ///< five-point difference of A across neighbouring snapshots; NaN within two of the ends
};

struct ScatterResult {
    std::vector<PhasePoint> seeds;
    std::vector<std::size_t> seed_ids;
    std::vector<TailFit> seed_v_limit;
    std::vector<TailFit> seed_w1_limit;
    std::vector<WaveRow> wave;
    std::vector<ResidualRow> residual;
    std::vector<FRow> f;
    std::vector<ARow> a;
};

/// Runs every scattering diagnostic on a history produced from data `d`.
ScatterResult scatter(const FlowHistory& h, const GaussianData& d, const ScatterOptions& opt);

/// Residual of f(t, .) against the profile at the given scattering states: the seeds'
/// time-0 data f0(seed) compared with f0 of the backward trace of `targets` from t.
double residual_sup(const HistoryField& hf, const GaussianData& d, double t, std::span<const PhasePoint> targets,
                    std::span<const PhasePoint> seeds);

void write_wave_csv(const ScatterResult& r, const std::filesystem::path& path);
void write_residual_csv(const ScatterResult& r, const std::filesystem::path& path);
void write_a_csv(const ScatterResult& r, const std::filesystem::path& path);
void write_f_csv(const ScatterResult& r, const std::filesystem::path& path);

}  // namespace riesz
