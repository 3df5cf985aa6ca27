#pragma once

#include <functional>
#include <vector>

#include "wce/linalg.hpp"

namespace wce {

// Adaptive Dormand-Prince 5(4) explicit Runge-Kutta.

struct IvpOptions {
    double rtol = 1e-10;
    double atol = 1e-14;
    double max_step = 0.0;  // 0 means (t1 - t0) / 64
    long max_steps = 4000000;
};

struct IvpResult {
    std::vector<double> t;  // every accepted step, t0 first, t1 last
    std::vector<Vec> y;
    bool completed;         // false when max_steps ran out
};

using OdeRhs = std::function<Vec(double, const Vec&)>;

IvpResult integrate_rk45(const OdeRhs& f, Vec y0, double t0, double t1,
                         const IvpOptions& opts = {});

}  // namespace wce
