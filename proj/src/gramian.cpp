#include "wce/gramian.hpp"

#include <cmath>
#include <limits>

#include "wce/sym_eigen.hpp"

namespace wce {

Gramian build_gramian(const Spectrum& s, const UnitVector& b) {
    if (b.size() != s.n())
        fail(ErrorKind::DimensionMismatch, "actuator dimension does not match the spectrum");
    const int n = s.n();
    Mat w(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            w(i, j) = b[i] * b[j] / (s.eigenvalues[i] + s.eigenvalues[j]);
    return Gramian{b, s, w};
}

Eigenpair smallest_eigenpair(const Gramian& g) {
    SymEigenResult eig = sym_eigen(g.w);
    Vec v = eig.vectors.col(0);
    // first nonzero entry positive; entries below 1e-12 are treated as zero
    // so roundoff cannot flip the convention
    for (double x : v) {
        if (std::abs(x) > 1e-12) {
            if (x < 0.0)
                for (double& e : v) e = -e;
            break;
        }
    }
    return Eigenpair{eig.values.front(), UnitVector::normalized(std::move(v))};
}

double worst_energy(const Gramian& g) {
    const double lambda_min = smallest_eigenpair(g).value;
    if (lambda_min <= 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / lambda_min;
}

}  // namespace wce
