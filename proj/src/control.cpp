#include "wce/control.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <string>

#include "wce/gramian.hpp"
#include "wce/integrate.hpp"
#include "wce/minimax.hpp"

namespace wce {

namespace {

Mat finite_horizon_gramian(const Spectrum& s, const UnitVector& b, double horizon) {
    const int n = s.n();
    Mat w(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double rate = s.eigenvalues[i] + s.eigenvalues[j];
            w(i, j) = b[i] * b[j] * (1.0 - std::exp(-rate * horizon)) / rate;
        }
    return w;
}

}  // namespace

double default_horizon(const Spectrum& s) { return 40.0 / s.min(); }

Trajectory min_energy_control(const Spectrum& s, const UnitVector& b, const Vec& x0,
                              double horizon, const ControlConfig& cfg) {
    const int n = s.n();
    if (b.size() != n || static_cast<int>(x0.size()) != n)
        fail(ErrorKind::DimensionMismatch, "actuator or initial state dimension mismatch");
    if (!(horizon > 0.0)) fail(ErrorKind::InvalidInput, "horizon must be positive");
    if (s.max() / s.min() > 1e3)
        fail(ErrorKind::SpectralRatioTooLarge,
             "spectral ratio above 1e3; the controlled dynamics are too stiff here");

    const Mat w_t = finite_horizon_gramian(s, b, horizon);
    const auto weights = solve_linear(w_t, x0);
    if (!weights)
        fail(ErrorKind::SingularGramian, "finite-horizon Gramian is singular for this actuator");
    const Vec& w = *weights;
    const auto& lam = s.eigenvalues;

    const auto control = [&](double t) {
        double u = 0.0;
        for (int i = 0; i < n; ++i) u -= b[i] * std::exp(-lam[i] * t) * w[i];
        return u;
    };

    // reverse time: y(tau) = x(T - tau) starts at the origin, where the
    // plant is contractive and the integrator error decays
    const OdeRhs rhs = [&](double tau, const Vec& y) {
        const double u = control(horizon - tau);
        Vec dy(n);
        for (int i = 0; i < n; ++i) dy[i] = -(lam[i] * y[i] + b[i] * u);
        return dy;
    };

    IvpOptions opts;
    opts.rtol = cfg.rtol;
    opts.atol = cfg.atol * std::max(1.0, norm2(x0));
    opts.max_step = horizon / std::max(1, cfg.min_grid_steps);
    IvpResult ivp = integrate_rk45(rhs, Vec(n, 0.0), 0.0, horizon, opts);
    if (!ivp.completed)
        fail(ErrorKind::InternalInvariantViolation, "integrator failed to reach the horizon");

    const size_t m = ivp.t.size();
    Trajectory traj;
    traj.time.resize(m);
    traj.states.resize(m);
    traj.controls.resize(m);
    for (size_t k = 0; k < m; ++k) {
        const size_t r = m - 1 - k;
        traj.time[k] = std::clamp(horizon - ivp.t[r], 0.0, horizon);
        traj.states[k] = ivp.y[r];
        traj.controls[k] = control(traj.time[k]);
    }
    traj.time.front() = 0.0;
    traj.time.back() = horizon;

    double energy = 0.0;
    for (size_t k = 0; k + 1 < m; ++k) {
        const double u0 = traj.controls[k];
        const double u1 = traj.controls[k + 1];
        energy += 0.5 * (u0 * u0 + u1 * u1) * (traj.time[k + 1] - traj.time[k]);
    }
    traj.total_energy = energy;
    traj.terminal_error = norm2(traj.states.back());
    traj.initial_error = norm2(sub(traj.states.front(), x0));
    traj.horizon_too_short =
        std::max(traj.terminal_error, traj.initial_error) > cfg.terminal_tol;
    return traj;
}

EnergyBoundReport verify_energy_bound(const Spectrum& s, const UnitVector& b, int trials,
                                      std::uint64_t seed) {
    if (!b.in_z())
        fail(ErrorKind::SingularGramian, "actuator with a zero entry has a singular Gramian");
    const double bound = worst_energy(build_gramian(s, b));

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double max_energy = 0.0;
    bool all_within = true;
    for (int trial = 0; trial < trials; ++trial) {
        Vec x(s.n());
        double norm = 0.0;
        do {
            for (double& v : x) v = gauss(rng);
            norm = norm2(x);
        } while (norm < 1e-6);
        for (double& v : x) v /= norm;
        const double e = energy_at(s, UnitVector::normalized(x), b);
        max_energy = std::max(max_energy, e);
        if (e > bound + 1e-9) all_within = false;
    }
    return EnergyBoundReport{trials, bound, max_energy, max_energy / bound, all_within};
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    const int n = traj.states.empty() ? 0 : static_cast<int>(traj.states.front().size());
    os << "t";
    for (int i = 1; i <= n; ++i) os << ",x_" << i;
    os << ",u\n";
    char buf[32];
    for (size_t k = 0; k < traj.time.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g", traj.time[k]);
        os << buf;
        for (int i = 0; i < n; ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", traj.states[k][i]);
            os << ',' << buf;
        }
        std::snprintf(buf, sizeof buf, "%.17g", traj.controls[k]);
        os << ',' << buf << '\n';
    }
}

}  // namespace wce
