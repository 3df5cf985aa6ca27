#include "wce/cauchy.hpp"

#include <algorithm>
#include <string>

namespace wce {

std::vector<int> sigma_star_signs(int n) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = (i % 2 == 0) ? -1 : 1;
    return s;
}

CauchyGram build_psi(const Spectrum& s) {
    const int n = s.n();
    Mat psi(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            psi(i, j) = 1.0 / (s.eigenvalues[i] + s.eigenvalues[j]);
    return CauchyGram{s, psi};
}

double cauchy_det(const Vec& alphas, const Vec& betas) {
    if (alphas.size() != betas.size())
        fail(ErrorKind::LengthMismatch, "alpha and beta lists differ in length");
    if (alphas.empty()) fail(ErrorKind::EmptyInput, "cauchy_det of an empty list");
    return detail::cauchy_det_impl<double>(alphas, betas);
}

Mat psi_inverse(const CauchyGram& psi) {
    const int n = psi.spectrum.n();
    const auto& lam = psi.spectrum.eigenvalues;
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double v = detail::psi_inverse_entry_impl<double>(
                lam, static_cast<size_t>(i), static_cast<size_t>(j));
            inv(i, j) = v;
            inv(j, i) = v;
        }
    return inv;
}

Mat checkerboard_conjugate(const Mat& m) {
    if (!is_square(m)) fail(ErrorKind::DimensionMismatch, "conjugation needs a square matrix");
    const std::vector<int> s = sigma_star_signs(m.rows());
    Mat out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out(i, j) = static_cast<double>(s[i] * s[j]) * m(i, j);
    return out;
}

namespace exact {

RatVec validate_spectrum(RatVec values) {
    if (values.empty()) fail(ErrorKind::EmptyInput, "spectrum is empty");
    if (static_cast<int>(values.size()) > kMaxRationalDimension)
        fail(ErrorKind::DimensionTooLarge,
             "n = " + std::to_string(values.size()) + " exceeds the exact-mode cap of " +
                 std::to_string(kMaxRationalDimension));
    std::sort(values.begin(), values.end());
    if (!(Rational(0) < values.front()))
        fail(ErrorKind::NonPositiveEigenvalue, "every eigenvalue must be > 0");
    for (size_t i = 0; i + 1 < values.size(); ++i)
        if (values[i] == values[i + 1])
            fail(ErrorKind::DuplicateEigenvalue, "eigenvalues must be pairwise distinct");
    return values;
}

RatMat psi(const RatVec& lambdas) {
    const size_t n = lambdas.size();
    RatMat m(n, RatVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m[i][j] = Rational(1) / (lambdas[i] + lambdas[j]);
    return m;
}

Rational cauchy_det(const RatVec& alphas, const RatVec& betas) {
    if (alphas.size() != betas.size())
        fail(ErrorKind::LengthMismatch, "alpha and beta lists differ in length");
    if (alphas.empty()) fail(ErrorKind::EmptyInput, "cauchy_det of an empty list");
    return detail::cauchy_det_impl<Rational>(alphas, betas);
}

RatMat psi_inverse(const RatVec& lambdas) {
    const size_t n = lambdas.size();
    RatMat inv(n, RatVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            Rational v = detail::psi_inverse_entry_impl<Rational>(lambdas, i, j);
            inv[i][j] = v;
            inv[j][i] = v;
        }
    return inv;
}

RatMat checkerboard_conjugate(const RatMat& m) {
    const size_t n = m.size();
    const std::vector<int> s = sigma_star_signs(static_cast<int>(n));
    RatMat out(n, RatVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            out[i][j] = s[i] * s[j] > 0 ? m[i][j] : -m[i][j];
    return out;
}

}  // namespace exact

}  // namespace wce
