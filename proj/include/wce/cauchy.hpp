#pragma once

#include <vector>

#include "wce/linalg.hpp"
#include "wce/rational.hpp"
#include "wce/spectrum.hpp"

namespace wce {

// Exact-mode dimension cap; see kMaxDimension for the float mode.
inline constexpr int kMaxRationalDimension = 10;

// Diagonal of the alternating signature matrix: (-1, +1, -1, ...).
std::vector<int> sigma_star_signs(int n);

// The Gram matrix of the all-ones actuator: entries[i][j] = 1/(li + lj).
// Symmetric, entrywise positive, positive definite for a valid spectrum.
struct CauchyGram {
    Spectrum spectrum;
    Mat entries;
};

CauchyGram build_psi(const Spectrum& s);

// Symmetric-pair Cauchy determinant product
//   prod_k 1/(alpha_k + beta_k)
//   * prod_{i<j} ((alpha_j - alpha_i)/(alpha_i + alpha_j))
//              * ((beta_j  - beta_i )/(beta_i  + beta_j)).
// For alpha == beta this is det [1/(alpha_i + alpha_j)] exactly, which is
// the only case the rest of the project consumes; it also telescopes its
// own rank-one-update recursion for arbitrary pairs. It is NOT the general
// two-list Cauchy determinant (that one has cross terms alpha_i + beta_j in
// the denominator).
double cauchy_det(const Vec& alphas, const Vec& betas);

// Closed-form inverse of Psi:
//   Psi^(ij) = prod_k (l_i + l_k) * prod_k (l_j + l_k)
//            / ((l_i + l_j) * prod_{k != i} (l_i - l_k)
//                           * prod_{k != j} (l_j - l_k)).
// Entry (i,j) carries sign (-1)^(i+j) (checkerboard); the closed form is far
// more accurate on Cauchy structure than generic elimination, which exists
// in the tests only as an oracle.
Mat psi_inverse(const CauchyGram& psi);

// sigma* M sigma*. Flips the checkerboard: applied to psi_inverse the result
// is entrywise strictly positive.
Mat checkerboard_conjugate(const Mat& m);

namespace exact {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<std::vector<Rational>>;

// Sorts ascending; rejects non-positive or duplicate entries and n > 10.
RatVec validate_spectrum(RatVec values);

RatMat psi(const RatVec& lambdas);
Rational cauchy_det(const RatVec& alphas, const RatVec& betas);
RatMat psi_inverse(const RatVec& lambdas);
RatMat checkerboard_conjugate(const RatMat& m);

}  // namespace exact

namespace detail {

// Shared formula bodies; S is double or Rational.
template <class S>
S cauchy_det_impl(const std::vector<S>& alphas, const std::vector<S>& betas) {
    const size_t k = alphas.size();
    S det(1);
    for (size_t i = 0; i < k; ++i) det = det / (alphas[i] + betas[i]);
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = i + 1; j < k; ++j) {
            det = det * ((alphas[j] - alphas[i]) / (alphas[i] + alphas[j]));
            det = det * ((betas[j] - betas[i]) / (betas[i] + betas[j]));
        }
    }
    return det;
}

// Entry (i,j) of Psi^-1 for Lambda = diag(lambdas), 0-based indices.
// Multiplications and divisions interleave so intermediates stay near the
// scale of the result.
template <class S>
S psi_inverse_entry_impl(const std::vector<S>& lam, size_t i, size_t j) {
    const size_t n = lam.size();
    S value = S(1) / (lam[i] + lam[j]);
    for (size_t k = 0; k < n; ++k) {
        value = value * (lam[i] + lam[k]);
        if (k != i) value = value / (lam[i] - lam[k]);
    }
    for (size_t k = 0; k < n; ++k) {
        value = value * (lam[j] + lam[k]);
        if (k != j) value = value / (lam[j] - lam[k]);
    }
    return value;
}

}  // namespace detail

}  // namespace wce
