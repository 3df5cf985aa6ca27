#pragma once

#include "wce/linalg.hpp"

namespace wce {

// Full eigendecomposition of a real symmetric matrix by cyclic Jacobi sweeps.
// Unconditionally stable for symmetric input and exact enough for the tiny
// dense matrices used throughout this project (n <= 12).
struct SymEigenResult {
    Vec values;   // ascending
    Mat vectors;  // column k is the eigenvector for values[k], orthonormal
};

// Sweeps run until every off-diagonal magnitude drops below
// tol * max_abs(input). Throws NotSymmetric for non-symmetric input.
SymEigenResult sym_eigen(const Mat& a, double tol = 1e-13);

}  // namespace wce
