#include "wce/minimax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace wce {

Vec positivity_certificate(const Spectrum& s) {
    const Mat inv = psi_inverse(build_psi(s));
    const Mat conj = checkerboard_conjugate(inv);
    const int n = s.n();
    Vec q(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q[i] += conj(i, j);
    for (int i = 0; i < n; ++i)
        if (!(q[i] > 0.0))
            fail(ErrorKind::InternalInvariantViolation,
                 "positivity certificate entry " + std::to_string(i) + " is " +
                     std::to_string(q[i]) + "; expected > 0");
    return q;
}

MinimaxSolution solve(const Spectrum& s, std::uint64_t arg_phi_cap) {
    const int n = s.n();
    const Vec q = positivity_certificate(s);

    double phi = 0.0;
    for (double qi : q) phi += qi;

    Vec v_sq(n);
    Vec v(n);
    for (int i = 0; i < n; ++i) {
        v_sq[i] = q[i] / phi;
        v[i] = std::sqrt(v_sq[i]);
    }
    UnitVector v_star = UnitVector::normalized(v);

    const std::vector<int> star = sigma_star_signs(n);
    const std::uint64_t sigma_count = 1ull << n;
    const std::uint64_t total = sigma_count * 2;

    std::vector<OptimalPair> pairs;
    pairs.reserve(static_cast<size_t>(std::min<std::uint64_t>(total, arg_phi_cap)));
    for (std::uint64_t mask = 0; mask < sigma_count && pairs.size() < arg_phi_cap; ++mask) {
        Vec x_plus(n);
        Vec b(n);
        for (int i = 0; i < n; ++i) {
            const double sigma_i = (mask >> i) & 1u ? -1.0 : 1.0;
            x_plus[i] = sigma_i * v_star[i];
            b[i] = sigma_i * static_cast<double>(star[i]) * v_star[i];
        }
        const UnitVector bu = UnitVector::normalized(b);
        pairs.push_back({UnitVector::normalized(x_plus), bu});
        if (pairs.size() < arg_phi_cap) {
            Vec x_minus(n);
            for (int i = 0; i < n; ++i) x_minus[i] = -x_plus[i];
            pairs.push_back({UnitVector::normalized(x_minus), bu});
        }
    }

    return MinimaxSolution{phi, 1.0 / phi, std::move(v_star), std::move(v_sq),
                           std::move(pairs), total};
}

double energy_at(const Spectrum& s, const UnitVector& x, const UnitVector& b) {
    if (x.size() != s.n() || b.size() != s.n())
        fail(ErrorKind::DimensionMismatch, "state or actuator dimension mismatch");
    if (!b.in_z()) return std::numeric_limits<double>::infinity();
    const Mat inv = psi_inverse(build_psi(s));
    const int n = s.n();
    double e = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e += (x[i] / b[i]) * inv(i, j) * (x[j] / b[j]);
    return e;
}

namespace exact {

Solution solve(const RatVec& lambdas) {
    const size_t n = lambdas.size();
    const RatMat conj = checkerboard_conjugate(psi_inverse(lambdas));

    Solution out;
    out.certificate.assign(n, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) out.certificate[i] = out.certificate[i] + conj[i][j];
        if (!(Rational(0) < out.certificate[i]))
            fail(ErrorKind::InternalInvariantViolation,
                 "exact positivity certificate entry is not positive");
    }
    out.phi = Rational(0);
    for (const Rational& qi : out.certificate) out.phi = out.phi + qi;
    out.v_star_sq.reserve(n);
    for (const Rational& qi : out.certificate) out.v_star_sq.push_back(qi / out.phi);
    return out;
}

}  // namespace exact

}  // namespace wce
