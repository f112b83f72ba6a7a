#pragma once

#include "riesz/vec.hpp"

namespace riesz {

/// Interaction law w(x) = lambda (|x|^2 + eps^2)^{-alpha/2}.
///
/// With eps = 0 this is the pure inverse power law lambda |x|^{-alpha}. The closed forms
/// below hold for 0 < alpha < 3; simulation runs additionally require alpha < 1.
struct RieszParams {
    double alpha = 0.75;
    double lambda = 1.0;
    double eps = 0.0;

    /// Throws std::invalid_argument on out-of-range parameters. `for_simulation`
    /// tightens the exponent range to the long-range regime 0 < alpha < 1.
    void validate(bool for_simulation = false) const;

    RieszParams with_eps(double e) const { return {alpha, lambda, e}; }
};

double potential(const RieszParams& p, const Vec3& x);

/// Gradient -alpha lambda x (|x|^2+eps^2)^{-(alpha+2)/2}. Odd in x.
Vec3 grad(const RieszParams& p, const Vec3& x);

/// Exact Hessian of `potential`; symmetric.
Mat3 hessian(const RieszParams& p, const Vec3& x);

/// Analytic Laplacian of the softened potential (trace of `hessian`).
double laplacian(const RieszParams& p, const Vec3& x);

/// d/d(eps) of `grad` at fixed x. Used when the softening length itself varies in time.
Vec3 grad_eps_derivative(const RieszParams& p, const Vec3& x);

}  // namespace riesz
