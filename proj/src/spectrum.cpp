#include "wce/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wce/sym_eigen.hpp"

namespace wce {

UnitVector::UnitVector(Vec entries) : v_(std::move(entries)) {
    if (v_.empty()) fail(ErrorKind::EmptyInput, "empty vector");
    const double n = norm2(v_);
    if (std::abs(n - 1.0) > 1e-12)
        fail(ErrorKind::NotUnitNorm, "vector norm " + std::to_string(n) + " is not 1");
}

UnitVector UnitVector::normalized(Vec v) {
    const double n = norm2(v);
    if (n == 0.0) fail(ErrorKind::NotUnitNorm, "cannot normalize the zero vector");
    for (double& x : v) x /= n;
    return UnitVector(std::move(v));
}

bool UnitVector::in_z() const {
    return std::none_of(v_.begin(), v_.end(), [](double x) { return x == 0.0; });
}

Spectrum validate_spectrum(Vec values) {
    if (values.empty()) fail(ErrorKind::EmptyInput, "spectrum is empty");
    if (static_cast<int>(values.size()) > kMaxDimension)
        fail(ErrorKind::DimensionTooLarge,
             "n = " + std::to_string(values.size()) + " exceeds the cap of " +
                 std::to_string(kMaxDimension));
    std::sort(values.begin(), values.end());
    if (!(values.front() > 0.0) || !std::isfinite(values.back()))
        fail(ErrorKind::NonPositiveEigenvalue,
             "system must be completely unstable: every eigenvalue must be finite and > 0");
    for (size_t i = 0; i + 1 < values.size(); ++i) {
        const double gap = values[i + 1] - values[i];
        if (gap < kDuplicateRelativeGap * values[i + 1])
            fail(ErrorKind::DuplicateEigenvalue,
                 "eigenvalues " + std::to_string(values[i]) + " and " +
                     std::to_string(values[i + 1]) + " are not distinct at relative gap 1e-10");
    }
    return Spectrum{std::move(values)};
}

SymmetricSystem diagonalize(const Mat& a) {
    if (!is_square(a)) fail(ErrorKind::NotSymmetric, "matrix is not square");
    const int n = a.rows();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a(i, j) != a(j, i))
                fail(ErrorKind::NotSymmetric, "matrix is not symmetric (enforced, not repaired)");

    SymEigenResult eig = sym_eigen(a);
    Spectrum spectrum = validate_spectrum(eig.values);

    const double ortho = max_abs(eig.vectors * transpose(eig.vectors) - Mat::identity(n));
    if (ortho > 1e-12)
        fail(ErrorKind::InternalInvariantViolation,
             "eigenbasis orthogonality defect " + std::to_string(ortho) + " exceeds 1e-12");

    // residual check on the reconstruction
    Mat lambda(n, n);
    for (int i = 0; i < n; ++i) lambda(i, i) = spectrum.eigenvalues[i];
    const Mat rebuilt = eig.vectors * lambda * transpose(eig.vectors);
    const double residual = max_abs(rebuilt - a);
    const double scale = std::max(max_abs(a), 1e-300);
    if (residual > 1e-9 * scale)
        fail(ErrorKind::InternalInvariantViolation,
             "eigendecomposition residual " + std::to_string(residual) + " exceeds 1e-9 * ||A||");

    return SymmetricSystem{a, eig.vectors, std::move(spectrum)};
}

UnitVector pull_back_actuator(const SymmetricSystem& sys, const UnitVector& b_diag) {
    if (b_diag.size() != sys.spectrum.n())
        fail(ErrorKind::DimensionMismatch, "actuator dimension does not match the system");
    return UnitVector::normalized(mat_vec(sys.theta, b_diag.entries()));
}

}  // namespace wce
