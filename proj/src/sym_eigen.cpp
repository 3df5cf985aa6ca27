#include "wce/sym_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wce {

namespace {

double max_off_diagonal(const Mat& a) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

}  // namespace

SymEigenResult sym_eigen(const Mat& a_in, double tol) {
    if (!is_square(a_in)) fail(ErrorKind::NotSymmetric, "sym_eigen requires a square matrix");
    const int n = a_in.rows();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a_in(i, j) != a_in(j, i))
                fail(ErrorKind::NotSymmetric, "sym_eigen requires exact symmetry");

    Mat a = a_in;
    Mat v = Mat::identity(n);
    const double scale = max_abs(a_in);
    const double thresh = tol * (scale > 0.0 ? scale : 1.0);

    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps && max_off_diagonal(a) > thresh; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= thresh * 1e-3) continue;

                // Rotation angle chosen to zero a(p,q); the smaller-root form
                // keeps |t| <= 1 for stability.
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a(p, p);
                const double aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = akp - s * (akq + tau * akp);
                    a(p, k) = a(k, p);
                    a(k, q) = akq + s * (akp - tau * akq);
                    a(q, k) = a(k, q);
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = vkp - s * (vkq + tau * vkp);
                    v(k, q) = vkq + s * (vkp - tau * vkq);
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

    SymEigenResult res;
    res.values.resize(n);
    res.vectors = Mat(n, n);
    for (int k = 0; k < n; ++k) {
        res.values[k] = a(order[k], order[k]);
        for (int i = 0; i < n; ++i) res.vectors(i, k) = v(i, order[k]);
    }
    return res;
}

}  // namespace wce
