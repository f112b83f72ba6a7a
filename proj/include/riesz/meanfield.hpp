#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "riesz/kernel.hpp"
#include "riesz/vec.hpp"

namespace riesz {

/// Sentinel for "no self-exclusion".
inline constexpr std::size_t no_exclude = std::numeric_limits<std::size_t>::max();

/// Structure-of-arrays copy of particle positions and weights, laid out for the pair loops.
class ParticleSet {
public:
    ParticleSet() = default;
    ParticleSet(std::span<const Vec3> x, std::span<const double> w) { assign(x, w); }

    void assign(std::span<const Vec3> x, std::span<const double> w);
    std::size_t size() const { return w_.size(); }

    const double* xs() const { return x_.data(); }
    const double* ys() const { return y_.data(); }
    const double* zs() const { return z_.data(); }
    const double* ws() const { return w_.data(); }

private:
    std::vector<double> x_, y_, z_, w_;
};

/// E(p) = -sum_{i != exclude} w_i grad(p - X_i).
Vec3 field_direct(const RieszParams& params, std::span<const Vec3> positions, std::span<const double> weights,
                  const Vec3& probe, std::size_t exclude = no_exclude);

/// Jacobian dE_i/dx_j = -sum w hessian(p - X), exact.
Mat3 field_gradient(const RieszParams& params, std::span<const Vec3> positions, std::span<const double> weights,
                    const Vec3& probe, std::size_t exclude = no_exclude);

struct HessianFd {
    Tensor3 value;               ///< value(i,j,k) = d_j d_k E_i
    bool step_too_small = false; ///< round-off in the differences exceeds 1e-4 of the result
};

/// Central differences of field_gradient with step h.
HessianFd field_hessian_fd(const RieszParams& params, std::span<const Vec3> positions,
                           std::span<const double> weights, const Vec3& probe, std::size_t exclude, double h);

// Same operations on a prepared ParticleSet (no per-call copies).
Vec3 field_at(const RieszParams& params, const ParticleSet& ps, const Vec3& probe, std::size_t exclude = no_exclude);
void field_and_gradient_at(const RieszParams& params, const ParticleSet& ps, const Vec3& probe, std::size_t exclude,
                           Vec3& e, Mat3& g);
HessianFd hessian_fd_at(const RieszParams& params, const ParticleSet& ps, const Vec3& probe, std::size_t exclude,
                        double h);

/// Far-field expansion about the geometric cell centre: monopole, + dipole, + quadrupole.
enum class Expansion { monopole, dipole, quadrupole };

struct TreeParams {
    double theta = 0.5;
    int leaf_size = 16;
    Expansion expansion = Expansion::dipole;

    void validate() const;
};

/// Octree over a fixed configuration. A cell whose particles all lie within b of its centre is
/// replaced by its expansion when b < theta * distance; theta = 0 opens every cell.
class BarnesHutTree {
public:
    BarnesHutTree(const RieszParams& params, std::span<const Vec3> positions, std::span<const double> weights,
                  const TreeParams& tp);

    Vec3 field(const Vec3& probe, std::size_t exclude = no_exclude) const;
    std::size_t cell_count() const { return cells_.size(); }

private:
    struct Cell {
        Vec3 centre{};
        double half = 0.0;
        double bmax = 0.0;
        double mass = 0.0;
        Vec3 dipole{};
        Mat3 quad{};  // sum w (X - c)(X - c)^T
        std::uint32_t begin = 0, end = 0;
        std::int32_t first_child = -1;  // children are contiguous
        std::int32_t n_children = 0;
    };

    void build(std::int32_t cell, int depth);

    RieszParams params_;
    TreeParams tp_;
    std::vector<std::size_t> order_;  // sorted slot -> original index
    std::vector<std::size_t> slot_;   // original index -> sorted slot
    ParticleSet sorted_;
    std::vector<Vec3> sorted_x_;
    std::vector<double> sorted_w_;
    std::vector<Cell> cells_;
};

Vec3 field_tree(const BarnesHutTree& tree, const Vec3& probe, std::size_t exclude = no_exclude);

enum class FieldMode { direct, tree };

/// Force evaluation used by the integrators.
struct FieldSolver {
    RieszParams params;
    FieldMode mode = FieldMode::direct;
    TreeParams tree;
    int threads = 1;

    /// E at every particle with self-exclusion.
    void node_fields(std::span<const Vec3> x, std::span<const double> w, std::vector<Vec3>& out) const;
    /// E at arbitrary points, nothing excluded.
    void probe_fields(std::span<const Vec3> x, std::span<const double> w, std::span<const Vec3> probes,
                      std::vector<Vec3>& out) const;
};

struct Probe {
    Vec3 p{};
    std::size_t exclude = no_exclude;
};

/// Particle positions thinned to at most max_node_probes (deterministic in seed) plus a
/// grid_per_axis^3 grid spanning the bounding box of the positions.
std::vector<Probe> build_probes(std::span<const Vec3> positions, std::size_t max_node_probes, int grid_per_axis,
                                std::uint64_t seed);

struct FieldNorms {
    double supE = 0.0;
    double supGradE = 0.0;   ///< operator norm
    double supHessE = 0.0;   ///< max entry
    std::size_t n_probes = 0;
    bool step_warning = false;
};

/// Probe-set maxima; always evaluated by direct summation.
FieldNorms sup_field_norms(const RieszParams& params, std::span<const Vec3> positions,
                           std::span<const double> weights, const std::vector<Probe>& probes, double fd_step,
                           int threads = 1);

}  // namespace riesz
