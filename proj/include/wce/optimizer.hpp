#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "wce/gramian.hpp"
#include "wce/spectrum.hpp"

namespace wce {

// Gradient ascent of xi(b) = lambda_min W(b) on the unit sphere. This is the
// numerical verification path: it never touches the closed-form solution.

struct AscentConfig {
    UnitVector start;          // must lie in Z (no zero entries)
    double initial_step = 1.0;
    int max_iterations = 10000;
    double gradient_tol = 1e-10;  // Riemannian gradient norm
};

struct AscentIterate {
    UnitVector b;
    double xi;
    double gradient_norm;
};

struct AscentTrace {
    std::vector<AscentIterate> iterates;  // xi non-decreasing along accepted steps
    bool converged;                       // gradient norm reached the tolerance
    UnitVector final_point;
    double final_xi;
    double final_gradient_norm;
};

// Smallest Gramian eigenvalue as a potential over the sphere; zero exactly
// when b has a zero entry.
double xi(const Spectrum& s, const UnitVector& b);

// g = 2 W(x) b with x the smallest eigenvector of W(b). Only valid on Z,
// where the smallest eigenvalue is simple; throws ZeroEntryActuator off Z.
Vec euclidean_gradient(const Spectrum& s, const UnitVector& b);

// Projection of the euclidean gradient onto the tangent space at b.
Vec riemannian_gradient(const Spectrum& s, const UnitVector& b);

// Step along the projected gradient, renormalize, backtrack until xi
// improves (or, on an exactly flat comparison, until the gradient norm
// shrinks); the step halves down to 1e-14 before the run stalls.
AscentTrace ascend(const Spectrum& s, const AscentConfig& cfg);

// Residuals of the critical-point system at b in Z:
//   r1 = ||W(b) x - xi x||,  r2 = ||W(x) b - xi b||,
// with x the smallest eigenvector of W(b). Both vanish at every critical
// point sigma v*.
std::pair<double, double> critical_residual(const Spectrum& s, const UnitVector& b);

// Uniform draw on the sphere, resampling until every |b_i| >= 1e-3 so the
// start point sits safely inside Z.
UnitVector random_unit_in_z(int n, std::mt19937_64& rng);

}  // namespace wce
