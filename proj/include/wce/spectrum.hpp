#pragma once

#include <vector>

#include "wce/linalg.hpp"

namespace wce {

// Largest dimension handled in double precision; Cauchy conditioning grows
// exponentially with n, so anything bigger is rejected up front.
inline constexpr int kMaxDimension = 12;

// Relative gap under which two eigenvalues are treated as duplicates. Below
// this the (lambda_i - lambda_j)^-1 factors in the inverse formulas are
// unreliable in doubles.
inline constexpr double kDuplicateRelativeGap = 1e-10;

// Validated eigenvalue list 0 < lambda_1 < ... < lambda_n.
struct Spectrum {
    Vec eigenvalues;  // strictly increasing, all positive

    int n() const { return static_cast<int>(eigenvalues.size()); }
    double min() const { return eigenvalues.front(); }
    double max() const { return eigenvalues.back(); }
};

// Unit-norm vector on S^(n-1); used for actuators and initial states.
class UnitVector {
public:
    // Validates the norm to 1e-12; throws NotUnitNorm otherwise.
    explicit UnitVector(Vec entries);

    // Rescales an arbitrary nonzero vector onto the sphere.
    static UnitVector normalized(Vec v);

    const Vec& entries() const { return v_; }
    int size() const { return static_cast<int>(v_.size()); }
    double operator[](int i) const { return v_[static_cast<size_t>(i)]; }

    bool in_z() const;  // all entries nonzero

private:
    Vec v_;
};

// A = Theta * Lambda * Theta^T with Theta orthogonal and Lambda the sorted
// positive spectrum.
struct SymmetricSystem {
    Mat a;
    Mat theta;  // columns are eigenvectors, ordered with the spectrum
    Spectrum spectrum;
};

// Sorts ascending and rejects non-positive entries, near-duplicates
// (relative gap < 1e-10), empty input and n > 12. Never repairs.
Spectrum validate_spectrum(Vec values);

// Eigendecomposition by cyclic Jacobi, then spectrum validation. The
// reconstruction residual ||Theta Lambda Theta^T - A||_max must come out
// below 1e-9 * ||A||_max or the decomposition is rejected.
SymmetricSystem diagonalize(const Mat& a);

// Actuator in diagonal coordinates -> actuator in original coordinates
// (b = Theta * b_diag). Norm is preserved.
UnitVector pull_back_actuator(const SymmetricSystem& sys, const UnitVector& b_diag);

}  // namespace wce
