#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wce/cauchy.hpp"
#include "wce/gramian.hpp"
#include "wce/spectrum.hpp"

namespace wce {

// One optimal pair: worst-case initial state x and optimal actuator b.
struct OptimalPair {
    UnitVector x;
    UnitVector b;
};

// Closed-form solution of the minimax actuator problem for a diagonal
// positive-definite system:
//   phi     = 1^T sigma* Psi^-1 sigma* 1       (worst-case energy)
//   v*_i^2  = (sigma* Psi^-1 sigma* 1)_i / phi (optimal actuator, positive)
//   arg phi = { (+-sigma v*, sigma sigma* v*) : sigma in Sigma },
// 2^(n+1) distinct pairs, enumerated in ascending sign-mask order with the
// + pair before the - pair.
struct MinimaxSolution {
    double phi;
    double xi_star;  // 1/phi, the optimal smallest Gramian eigenvalue
    UnitVector v_star;
    Vec v_star_sq;
    std::vector<OptimalPair> arg_phi;
    std::uint64_t arg_phi_total;  // 2^(n+1)
};

// arg_phi_cap bounds the enumeration length (the set is exponential in n);
// the default covers the full set for every n <= 12.
MinimaxSolution solve(const Spectrum& s, std::uint64_t arg_phi_cap = 1u << 13);

// sigma* Psi^-1 sigma* 1: the row sums of the entrywise-positive conjugated
// inverse. Throws InternalInvariantViolation if any entry fails to be
// strictly positive, which would indicate an arithmetic bug.
Vec positivity_certificate(const Spectrum& s);

// Minimum steering energy x^T W(b)^-1 x, evaluated through the
// diag(b)^-1 Psi^-1 diag(b)^-1 factorization. +infinity when b has a zero
// entry (singular Gramian).
double energy_at(const Spectrum& s, const UnitVector& x, const UnitVector& b);

namespace exact {

// Exact-rational evaluation of the closed form for rational spectra.
struct Solution {
    Rational phi;
    RatVec certificate;  // sigma* Psi^-1 sigma* 1, all entries positive
    RatVec v_star_sq;    // certificate / phi, sums to exactly 1
};

Solution solve(const RatVec& lambdas);

}  // namespace exact

}  // namespace wce
