#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "riesz/vec.hpp"

namespace riesz {

/// Gaussian phase-space profile f0(x,v) = eta exp(-|x-cx|^2/(2 sx^2) - |v-cv|^2/(2 sv^2)).
struct GaussianData {
    double eta = 1.0;
    double sigma_x = 1.0;
    double sigma_v = 1.0;
    Vec3 center_x{0.0, 0.0, 0.0};
    Vec3 center_v{0.0, 0.0, 0.0};

    void validate() const;
    /// Closed-form integral over R^6.
    double analytic_mass() const;
};

enum class QuadratureRule { midpoint, gauss_legendre };

/// How the velocity nodes attached to different position nodes are arranged.
///  - none: every position node carries the same velocity grid.
///  - sublattice: each position node carries the velocity grid shifted to a distinct point
///    of an n_x-fold refined sub-lattice, so no two particles share a velocity.
enum class VelocityOffsets { none, sublattice };

struct QuadratureSpec {
    double radius_x = 5.0;
    double radius_v = 5.0;
    int n_x = 8;
    int n_v = 8;
    QuadratureRule rule = QuadratureRule::midpoint;
    VelocityOffsets offsets = VelocityOffsets::none;
    std::size_t max_nodes = 20'000'000;

    /// Throws std::invalid_argument; radii below 5 sigma are rejected.
    void validate(const GaussianData& d) const;
    std::size_t node_count() const;
    /// Mean spacing of the position nodes (box width / nodes per axis).
    double position_spacing() const { return 2.0 * radius_x / n_x; }
    double velocity_spacing() const { return 2.0 * radius_v / n_v; }
};

/// Weighted particle discretization of f0: f0 ~ sum_i w_i delta(x - x_i) delta(v - v_i).
struct Ensemble {
    std::vector<Vec3> x;
    std::vector<Vec3> v;
    std::vector<double> w;

    std::size_t size() const { return w.size(); }
    double total_mass() const;
    Vec3 total_momentum() const;
};

double evaluate_f0(const GaussianData& d, const Vec3& x, const Vec3& v);

/// Exact (grad_x f0, grad_v f0).
std::pair<Vec3, Vec3> grad_f0(const GaussianData& d, const Vec3& x, const Vec3& v);

/// Numerical smallness norms of f0; weighted entries carry the factor <x>.
struct NormBundle {
    double l1 = 0.0;    ///< ||f0||_{L^1}
    double linf = 0.0;  ///< ||f0||_{L^inf}

    // Unweighted: W^{1,1}, W^{1,inf}, W_x^{1,1} W_v^{1,inf}, W_v^{1,1} W_x^{1,inf}.
    double w11 = 0.0;
    double w1inf = 0.0;
    double mixed_xv = 0.0;
    double mixed_vx = 0.0;

    // Same four norms applied to <x> f0.
    double weighted_w11 = 0.0;
    double weighted_w1inf = 0.0;
    double weighted_mixed_xv = 0.0;
    double weighted_mixed_vx = 0.0;

    /// Sum of the four unweighted norms (decay-only smallness condition).
    double total_unweighted() const { return w11 + w1inf + mixed_xv + mixed_vx; }
    /// Sum of the four weighted norms (smallness condition for modified scattering).
    double total() const { return weighted_w11 + weighted_w1inf + weighted_mixed_xv + weighted_mixed_vx; }

    /// Set when doubling the node count per axis moved some entry by more than 5%.
    bool underresolved = false;

    std::vector<std::pair<std::string, double>> entries() const;
};

/// L^1 entries by tensor quadrature on the quadrature box, sup entries on the (2n+1)-point grid of
/// cell centres and faces. The Gaussian factorizes in (x, v), so each derivative term is a
/// product of a position factor and a velocity factor and the 6D norms reduce to 3D ones.
NormBundle smallness_norms(const GaussianData& d, const QuadratureSpec& q, bool check_resolution = true);

/// eta such that smallness_norms(...).total() equals `target` (norms are linear in eta).
double eta_for_smallness(GaussianData d, const QuadratureSpec& q, double target);

/// Tensor-rule nodes with w_i = f0(x_i, v_i) * quadrature weight. Throws std::length_error
/// when the node count exceeds q.max_nodes.
Ensemble discretize(const GaussianData& d, const QuadratureSpec& q);

/// Sum of the weights `discretize` would produce, without storing the nodes.
double quadrature_mass(const GaussianData& d, const QuadratureSpec& q);

/// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

/// CSV with header x1,x2,x3,v1,v2,v3,w and 17 significant digits.
void write_ensemble_csv(const Ensemble& e, const std::filesystem::path& path);
Ensemble read_ensemble_csv(const std::filesystem::path& path);

}  // namespace riesz
