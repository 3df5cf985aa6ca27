#pragma once

#include "wce/cauchy.hpp"
#include "wce/spectrum.hpp"

namespace wce {

// Infinite-horizon Gramian W(b) = diag(b) Psi diag(b) for the diagonalized
// system. Built algebraically, never by quadrature (the quadrature version
// lives in the tests as an oracle).
struct Gramian {
    UnitVector b;
    Spectrum spectrum;
    Mat w;  // w(i,j) = b_i b_j / (lambda_i + lambda_j)
};

struct Eigenpair {
    double value;
    UnitVector vector;  // sign convention: first nonzero entry positive
};

Gramian build_gramian(const Spectrum& s, const UnitVector& b);

// Smallest eigenvalue and unit eigenvector of W(b). On Z (all entries of b
// nonzero) the smallest eigenvalue is simple and the vector is unique up to
// global sign; off Z an arbitrary kernel vector is returned.
Eigenpair smallest_eigenpair(const Gramian& g);

// 1 / lambda_min W(b); +infinity when the Gramian is singular.
double worst_energy(const Gramian& g);

}  // namespace wce
