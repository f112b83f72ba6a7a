#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riesz/kernel.hpp"
#include "riesz/vec.hpp"

namespace riesz {

struct RateFit {
    double exponent = 0.0;
    double intercept = 0.0;   ///< natural log of the prefactor
    double r_squared = 0.0;
    double t_lo = 0.0;
    double t_hi = 0.0;
    std::size_t n_points = 0;
};

/// Least-squares slope of log y against log t over the points with t in [t_lo, t_hi].
/// Throws std::invalid_argument when fewer than min_points fall in the window, when y <= 0
/// there, or when t is not strictly increasing.
RateFit rate_fit(const std::vector<std::pair<double, double>>& series, double t_lo, double t_hi,
                 std::size_t min_points = 5);

/// A spatial density with known L1 and L-infinity norms. Support is taken to lie within
/// `radius` of `center` for quadrature purposes.
struct Density {
    std::function<double(const Vec3&)> rho;
    double l1 = 0.0;
    double linf = 0.0;
    Vec3 center{};
    double radius = 0.0;
};

/// Normalized Gaussian of total mass `mass`, standard deviation sigma.
Density gaussian_density(double mass, double sigma, const Vec3& center = {0.0, 0.0, 0.0});

struct InterpolationQuadrature {
    double split_radius = 0.625;  ///< ball around x integrated with the singular substitution
    int radial_nodes = 16;        ///< Gauss-Legendre nodes per radial panel
    int angular_nodes = 24;       ///< per angle (cos theta by Gauss-Legendre, phi by trapezoid)
};

/// int rho(y) |x - y|^{-(m+alpha)} dy divided by ||rho||_1^{(3-m-alpha)/3} ||rho||_inf^{(m+alpha)/3}.
double interpolation_ratio(const RieszParams& params, const Density& rho, const Vec3& x, int m,
                           const InterpolationQuadrature& q = {});

/// Tolerances on fitted exponents and on the auxiliary acceptance checks.
struct Tolerances {
    double field_E = 0.2;
    double field_gradE = 0.2;
    double field_hessE = 0.3;
    double field_r2 = 0.98;
    double v_limit = 0.15;
    double a_limit = 0.15;
    double da_rate = 0.2;
    double da_fd = 0.05;
    double w1 = 0.2;
    double w2 = 0.15;
    double f1 = 0.25;
    double residual = 0.2;
    double residual_r2 = 0.95;
    double free_over_ref = 10.0;
    double g_growth = 1.5;
    double divergence = 1e-3;
};

/// Reads fields.csv, wave.csv, residual.csv, a_t.csv and f_field.csv from `run_dir`, checks that
/// their sidecars carry one config hash, and returns the report as a JSON string (2-space indent,
/// trailing newline). Throws IoError on missing inputs or hash mismatch.
std::string build_report(const std::filesystem::path& run_dir, double alpha, const Tolerances& tol);

}  // namespace riesz
