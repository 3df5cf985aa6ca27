#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "wce/spectrum.hpp"

namespace wce {

// Minimum-energy steering of dx/dt = Lambda x + b u from x0 to the origin
// over a finite horizon T, plus forward simulation tying the abstract energy
// value back to an actual trajectory.

struct ControlConfig {
    double rtol = 1e-10;
    double atol = 1e-14;
    double terminal_tol = 1e-6;
    int min_grid_steps = 4096;  // bounds the output grid spacing to T / this
};

struct Trajectory {
    std::vector<double> time;        // ascending, time[0] = 0, time.back() = T
    std::vector<Vec> states;
    std::vector<double> controls;
    double total_energy;             // trapezoid rule for int u^2 dt on the grid
    double terminal_error;           // ||x(T)||
    double initial_error;            // ||x(0) - x0|| (integration defect)
    bool horizon_too_short;          // terminal tolerance unmet
};

// Steering law u(t) = -b^T exp(-Lambda t) W_T^-1 x0 with the finite-horizon
// Gramian W_T[i][j] = b_i b_j (1 - exp(-(l_i+l_j) T)) / (l_i + l_j).
//
// The controlled plant is exponentially unstable forward in time, so the
// trajectory is integrated in reverse time from the origin, where the same
// dynamics are contractive; a forward shot would amplify roundoff by
// exp(lambda_max T) and bury the terminal state. The returned trajectory
// solves the same ODE, ends at the origin, and reproduces x0 at t = 0 up to
// integrator accuracy (reported as initial_error; tolerance misses set
// horizon_too_short).
//
// x0 may have any nonzero norm; energy scales quadratically with it.
// Throws SingularGramian when W_T is not invertible and
// SpectralRatioTooLarge when lambda_n / lambda_1 > 1e3 (the dynamics are too
// stiff for a 4th/5th-order explicit scheme at sensible cost).
Trajectory min_energy_control(const Spectrum& s, const UnitVector& b, const Vec& x0,
                              double horizon, const ControlConfig& cfg = {});

// Recommended horizon: 40 / lambda_1 puts the Gramian truncation error in
// the energy below 1e-10 for well-separated spectra.
double default_horizon(const Spectrum& s);

struct EnergyBoundReport {
    int trials;
    double worst_energy;        // 1 / lambda_min W(b)
    double max_sampled_energy;  // max over random unit x0 of x0^T W(b)^-1 x0
    double max_ratio;           // max_sampled_energy / worst_energy
    bool all_within_bound;      // every sample <= worst_energy + 1e-9
};

EnergyBoundReport verify_energy_bound(const Spectrum& s, const UnitVector& b, int trials,
                                      std::uint64_t seed);

// CSV with columns t, x_1..x_n, u.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

}  // namespace wce
