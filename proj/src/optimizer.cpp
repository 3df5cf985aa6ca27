#include "wce/optimizer.hpp"

#include <algorithm>
#include <cmath>

namespace wce {

namespace {

void require_in_z(const UnitVector& b) {
    if (!b.in_z())
        fail(ErrorKind::ZeroEntryActuator,
             "the derivative formula needs every actuator entry nonzero");
}

struct PointState {
    double xi;
    Vec gradient;  // riemannian
    double gradient_norm;
};

PointState evaluate(const Spectrum& s, const UnitVector& b) {
    const Gramian g = build_gramian(s, b);
    const Eigenpair p = smallest_eigenpair(g);
    const Gramian gx = build_gramian(s, p.vector);
    Vec grad = scaled(mat_vec(gx.w, b.entries()), 2.0);
    axpy(-dot(grad, b.entries()), b.entries(), grad);
    return PointState{p.value, grad, norm2(grad)};
}

}  // namespace

double xi(const Spectrum& s, const UnitVector& b) {
    return smallest_eigenpair(build_gramian(s, b)).value;
}

Vec euclidean_gradient(const Spectrum& s, const UnitVector& b) {
    require_in_z(b);
    const Eigenpair p = smallest_eigenpair(build_gramian(s, b));
    return scaled(mat_vec(build_gramian(s, p.vector).w, b.entries()), 2.0);
}

Vec riemannian_gradient(const Spectrum& s, const UnitVector& b) {
    Vec g = euclidean_gradient(s, b);
    axpy(-dot(g, b.entries()), b.entries(), g);
    return g;
}

AscentTrace ascend(const Spectrum& s, const AscentConfig& cfg) {
    require_in_z(cfg.start);
    if (cfg.start.size() != s.n())
        fail(ErrorKind::DimensionMismatch, "start point dimension mismatch");

    UnitVector b = cfg.start;
    PointState cur = evaluate(s, b);
    double step = cfg.initial_step;

    std::vector<AscentIterate> iterates;
    iterates.push_back({b, cur.xi, cur.gradient_norm});
    bool stalled = false;

    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
        if (cur.gradient_norm <= cfg.gradient_tol) break;

        bool accepted = false;
        while (step >= 1e-14) {
            Vec cand = b.entries();
            axpy(step, cur.gradient, cand);
            const double n = norm2(cand);
            if (n == 0.0) {
                step *= 0.5;
                continue;
            }
            for (double& x : cand) x /= n;
            UnitVector bc = UnitVector::normalized(std::move(cand));
            if (!bc.in_z()) {  // step crossed the boundary of Z; reject and halve
                step *= 0.5;
                continue;
            }
            PointState next = evaluate(s, bc);
            // Strict ascent, except near machine precision where xi ties are
            // accepted as long as the gradient norm still shrinks.
            const bool improves = next.xi > cur.xi ||
                                  (next.xi == cur.xi && next.gradient_norm < 0.9 * cur.gradient_norm);
            if (improves) {
                b = std::move(bc);
                cur = std::move(next);
                iterates.push_back({b, cur.xi, cur.gradient_norm});
                step = std::min(step * 2.0, 1e6);
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {  // no step of any size improves xi at double rounding
            stalled = true;
            break;
        }
    }

    // A stall only happens on the quadratic plateau around a maximum, where
    // xi changes fall below its floating-point resolution; that counts as
    // converged as long as the gradient norm is within two decades of the
    // requested tolerance.
    const bool converged = cur.gradient_norm <= cfg.gradient_tol ||
                           (stalled && cur.gradient_norm <= 100.0 * cfg.gradient_tol);
    return AscentTrace{std::move(iterates), converged, b, cur.xi, cur.gradient_norm};
}

std::pair<double, double> critical_residual(const Spectrum& s, const UnitVector& b) {
    require_in_z(b);
    const Gramian g = build_gramian(s, b);
    const Eigenpair p = smallest_eigenpair(g);
    const Gramian gx = build_gramian(s, p.vector);

    Vec r1 = mat_vec(g.w, p.vector.entries());
    axpy(-p.value, p.vector.entries(), r1);
    Vec r2 = mat_vec(gx.w, b.entries());
    axpy(-p.value, b.entries(), r2);
    return {norm2(r1), norm2(r2)};
}

UnitVector random_unit_in_z(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (;;) {
        Vec v(n);
        for (double& x : v) x = gauss(rng);
        const double norm = norm2(v);
        if (norm < 1e-6) continue;
        for (double& x : v) x /= norm;
        const bool inside = std::all_of(v.begin(), v.end(),
                                        [](double x) { return std::abs(x) >= 1e-3; });
        if (inside) return UnitVector::normalized(std::move(v));
    }
}

}  // namespace wce
