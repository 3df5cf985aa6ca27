#include "wce/integrate.hpp"

#include <algorithm>
#include <cmath>

namespace wce {

namespace {

// Dormand-Prince coefficients.
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187, kA53 = 64448.0 / 6561,
                 kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                 kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                 kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;
// 5th-order minus 4th-order weights, for the embedded error estimate.
constexpr double kE1 = 71.0 / 57600, kE3 = -71.0 / 16695, kE4 = 71.0 / 1920,
                 kE5 = -17253.0 / 339200, kE6 = 22.0 / 525, kE7 = -1.0 / 40;

Vec combine(const Vec& y, double h, std::initializer_list<std::pair<double, const Vec*>> terms) {
    Vec r = y;
    for (const auto& [w, k] : terms) axpy(h * w, *k, r);
    return r;
}

}  // namespace

IvpResult integrate_rk45(const OdeRhs& f, Vec y0, double t0, double t1, const IvpOptions& opts) {
    const size_t n = y0.size();
    const double span = t1 - t0;
    const double max_step = opts.max_step > 0.0 ? opts.max_step : span / 64.0;

    IvpResult out;
    out.t.push_back(t0);
    out.y.push_back(y0);
    out.completed = false;

    double t = t0;
    Vec y = std::move(y0);
    Vec k1 = f(t, y);
    double h = std::min(max_step, span / 64.0);

    for (long step = 0; step < opts.max_steps; ++step) {
        if (t1 - t <= 1e-12 * std::abs(span)) {
            out.completed = true;
            break;
        }
        h = std::min(h, t1 - t);

        const Vec k2 = f(t + h / 5.0, combine(y, h, {{kA21, &k1}}));
        const Vec k3 = f(t + 3.0 * h / 10.0, combine(y, h, {{kA31, &k1}, {kA32, &k2}}));
        const Vec k4 = f(t + 4.0 * h / 5.0, combine(y, h, {{kA41, &k1}, {kA42, &k2}, {kA43, &k3}}));
        const Vec k5 = f(t + 8.0 * h / 9.0,
                         combine(y, h, {{kA51, &k1}, {kA52, &k2}, {kA53, &k3}, {kA54, &k4}}));
        const Vec k6 = f(t + h, combine(y, h, {{kA61, &k1}, {kA62, &k2}, {kA63, &k3},
                                               {kA64, &k4}, {kA65, &k5}}));
        const Vec y_new =
            combine(y, h, {{kB1, &k1}, {kB3, &k3}, {kB4, &k4}, {kB5, &k5}, {kB6, &k6}});
        const Vec k7 = f(t + h, y_new);  // FSAL

        double err = 0.0;
        for (size_t i = 0; i < n; ++i) {
            const double e = h * (kE1 * k1[i] + kE3 * k3[i] + kE4 * k4[i] + kE5 * k5[i] +
                                  kE6 * k6[i] + kE7 * k7[i]);
            const double scale = opts.atol + opts.rtol * std::max(std::abs(y[i]), std::abs(y_new[i]));
            err += (e / scale) * (e / scale);
        }
        err = std::sqrt(err / static_cast<double>(n));

        if (err <= 1.0) {
            t += h;
            y = y_new;
            k1 = k7;
            out.t.push_back(t);
            out.y.push_back(y);
        }
        const double factor =
            err > 0.0 ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0) : 5.0;
        h = std::min(h * factor, max_step);
        if (!(h > 0.0) || t + h == t) break;  // step underflow
    }
    if (t1 - t <= 1e-12 * std::abs(span)) out.completed = true;
    return out;
}

}  // namespace wce
