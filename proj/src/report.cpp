#include "wce/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <set>

#include "wce/control.hpp"
#include "wce/optimizer.hpp"

namespace wce {

namespace {

// JSON has no infinity; singular-Gramian energies are reported as "inf".
Json json_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    return v;
}

Json json_vec(const Vec& v) {
    Json a = Json::array();
    for (double x : v) a.push_back(json_number(x));
    return a;
}

Vec parse_number_array(const Json& j, const std::string& key) {
    if (!j.is_array() || j.empty())
        fail(ErrorKind::InvalidInput, "\"" + key + "\" must be a non-empty array of numbers");
    Vec v;
    v.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number()) fail(ErrorKind::InvalidInput, "\"" + key + "\" holds a non-number");
        v.push_back(e.get<double>());
    }
    return v;
}

// A parsed JSON number counts as a small rational when its exact dyadic form
// has numerator under 2^40 and denominator under 2^20.
std::optional<Rational> small_rational(const Json& e) {
    if (e.is_number_unsigned() && e.get<unsigned long long>() > (1ull << 40))
        return std::nullopt;
    if (e.is_number_integer()) {
        const long long v = e.get<long long>();
        if (std::abs(v) > (1ll << 40)) return std::nullopt;
        return Rational(v);
    }
    const Rational r = Rational::from_double_exact(e.get<double>());
    if (r.den().bit_length() > 21 || r.num().abs().bit_length() > 41) return std::nullopt;
    return r;
}

struct PairCheck {
    double max_r1 = 0.0;
    double max_r2 = 0.0;
    bool sign_ok = true;
    double modulus_dev = 0.0;
};

// Stationarity, interlacing sign pattern and |x_i| = |b_i| across optimal
// pairs; cheap matrix-vector work only.
PairCheck check_pairs(const Spectrum& s, const MinimaxSolution& sol) {
    PairCheck out;
    const std::vector<int> star = sigma_star_signs(s.n());
    for (const OptimalPair& pair : sol.arg_phi) {
        const Gramian gb = build_gramian(s, pair.b);
        const Gramian gx = build_gramian(s, pair.x);
        Vec r1 = mat_vec(gb.w, pair.x.entries());
        axpy(-sol.xi_star, pair.x.entries(), r1);
        Vec r2 = mat_vec(gx.w, pair.b.entries());
        axpy(-sol.xi_star, pair.b.entries(), r2);
        out.max_r1 = std::max(out.max_r1, norm2(r1));
        out.max_r2 = std::max(out.max_r2, norm2(r2));

        int direction = 0;  // +1 for sgn(x) = +sigma* sgn(b), -1 for the mirror
        for (int i = 0; i < s.n(); ++i) {
            const int sx = pair.x[i] > 0 ? 1 : (pair.x[i] < 0 ? -1 : 0);
            const int sb = pair.b[i] > 0 ? 1 : (pair.b[i] < 0 ? -1 : 0);
            const int want = star[i] * sb;
            if (sx == 0 || want == 0) {
                out.sign_ok = false;
                break;
            }
            const int d = sx == want ? 1 : -1;
            if (direction == 0) direction = d;
            if (d != direction) {
                out.sign_ok = false;
                break;
            }
            out.modulus_dev = std::max(out.modulus_dev,
                                       std::abs(std::abs(pair.x[i]) - std::abs(pair.b[i])));
        }
    }
    return out;
}

Vec to_diagonal(const ResolvedProblem& p, const Vec& original) {
    if (!p.system) return original;
    return mat_vec(transpose(p.system->theta), original);
}

Vec to_reported(const ResolvedProblem& p, const Vec& diagonal) {
    if (!p.system) return diagonal;
    return mat_vec(p.system->theta, diagonal);
}

void append_csv_row(std::ostream& os, const std::vector<double>& row) {
    char buf[32];
    for (size_t i = 0; i < row.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", row[i]);
        if (i) os << ',';
        os << buf;
    }
    os << '\n';
}

}  // namespace

ProblemFile parse_problem(const Json& j) {
    if (!j.is_object()) fail(ErrorKind::InvalidInput, "problem file must be a JSON object");

    ProblemFile p;
    const bool has_eigs = j.contains("eigenvalues");
    const bool has_matrix = j.contains("matrix");
    if (has_eigs == has_matrix)
        fail(ErrorKind::InvalidInput,
             "exactly one of \"eigenvalues\" or \"matrix\" must be present");

    if (has_eigs) {
        p.eigenvalues = parse_number_array(j.at("eigenvalues"), "eigenvalues");
        exact::RatVec exact_values;
        bool all_small = true;
        for (const auto& e : j.at("eigenvalues")) {
            auto r = small_rational(e);
            if (!r) {
                all_small = false;
                break;
            }
            exact_values.push_back(*r);
        }
        if (all_small) p.eigenvalues_exact = std::move(exact_values);
    } else {
        const Json& m = j.at("matrix");
        if (!m.is_array() || m.empty()) fail(ErrorKind::InvalidInput, "\"matrix\" must be an array of rows");
        const int n = static_cast<int>(m.size());
        Mat a(n, n);
        for (int i = 0; i < n; ++i) {
            const Vec row = parse_number_array(m.at(i), "matrix");
            if (static_cast<int>(row.size()) != n)
                fail(ErrorKind::InvalidInput, "\"matrix\" must be square");
            for (int k = 0; k < n; ++k) a(i, k) = row[k];
        }
        p.matrix = std::move(a);
    }

    if (j.contains("mode")) {
        const std::string mode = j.at("mode").is_string() ? j.at("mode").get<std::string>() : "";
        if (mode != "float" && mode != "rational")
            fail(ErrorKind::InvalidInput, "\"mode\" must be \"float\" or \"rational\"");
        p.mode = mode;
    }
    if (j.contains("tolerances")) {
        const Json& t = j.at("tolerances");
        if (!t.is_object()) fail(ErrorKind::InvalidInput, "\"tolerances\" must be an object");
        if (t.contains("gradient")) p.gradient_tol = t.at("gradient").get<double>();
        if (t.contains("residual")) p.residual_tol = t.at("residual").get<double>();
        if (t.contains("terminal")) p.terminal_tol = t.at("terminal").get<double>();
    }
    if (j.contains("actuator")) p.actuator = parse_number_array(j.at("actuator"), "actuator");
    if (j.contains("x0")) p.x0 = parse_number_array(j.at("x0"), "x0");
    return p;
}

ResolvedProblem resolve_problem(const ProblemFile& problem, const std::string& mode_flag) {
    std::string mode = !mode_flag.empty() ? mode_flag : problem.mode;
    if (mode != "" && mode != "float" && mode != "rational")
        fail(ErrorKind::InvalidInput, "--mode must be float or rational");

    ResolvedProblem out;
    if (problem.matrix) {
        if (mode == "rational")
            fail(ErrorKind::InvalidInput, "rational mode needs eigenvalue input, not a matrix");
        out.system = diagonalize(*problem.matrix);
        out.spectrum = out.system->spectrum;
        return out;
    }

    const Vec& values = *problem.eigenvalues;
    const bool auto_rational = mode.empty() && problem.eigenvalues_exact &&
                               static_cast<int>(values.size()) <= kMaxRationalDimension;
    if (mode == "rational" || auto_rational) {
        exact::RatVec exact_values;
        if (problem.eigenvalues_exact) {
            exact_values = *problem.eigenvalues_exact;
        } else {
            for (double v : values) exact_values.push_back(Rational::from_double_exact(v));
        }
        out.rational_spectrum = exact::validate_spectrum(std::move(exact_values));
        out.rational_mode = true;
        Vec rounded;
        rounded.reserve(out.rational_spectrum->size());
        for (const Rational& r : *out.rational_spectrum) rounded.push_back(r.to_double());
        out.spectrum = validate_spectrum(std::move(rounded));
    } else {
        out.spectrum = validate_spectrum(values);
    }
    return out;
}

Json solve_report(const ResolvedProblem& problem, std::uint64_t arg_phi_cap) {
    const Spectrum& s = problem.spectrum;
    MinimaxSolution sol = solve(s);
    const Vec certificate = positivity_certificate(s);

    Json r;
    r["command"] = "solve";
    r["mode"] = problem.rational_mode ? "rational" : "float";
    r["coordinates"] = problem.system ? "original" : "diagonal";
    r["n"] = s.n();
    r["spectrum"] = json_vec(s.eigenvalues);

    std::optional<exact::Solution> exact_sol;
    if (problem.rational_mode) {
        exact_sol = exact::solve(*problem.rational_spectrum);
        r["phi"] = json_number(exact_sol->phi.to_double());
        r["xi_star"] = json_number((Rational(1) / exact_sol->phi).to_double());
    } else {
        r["phi"] = json_number(sol.phi);
        r["xi_star"] = json_number(sol.xi_star);
    }

    Vec v_star = sol.v_star.entries();
    Vec v_star_sq = sol.v_star_sq;
    if (exact_sol) {
        for (size_t i = 0; i < v_star_sq.size(); ++i) {
            v_star_sq[i] = exact_sol->v_star_sq[i].to_double();
            v_star[i] = std::sqrt(v_star_sq[i]);
        }
    }
    r["v_star"] = json_vec(to_reported(problem, v_star));
    r["v_star_sq"] = json_vec(v_star_sq);
    if (problem.system) r["v_star_diagonal"] = json_vec(v_star);

    if (exact_sol) {
        Json e;
        e["phi"] = exact_sol->phi.to_string();
        e["xi_star"] = (Rational(1) / exact_sol->phi).to_string();
        Json cert = Json::array();
        for (const Rational& q : exact_sol->certificate) cert.push_back(q.to_string());
        e["certificate"] = cert;
        Json vsq = Json::array();
        for (const Rational& q : exact_sol->v_star_sq) vsq.push_back(q.to_string());
        e["v_star_sq"] = vsq;
        r["exact"] = e;
    }

    Json pairs = Json::array();
    const std::uint64_t listed = std::min<std::uint64_t>(arg_phi_cap, sol.arg_phi.size());
    for (std::uint64_t i = 0; i < listed; ++i) {
        Json pj;
        pj["x"] = json_vec(to_reported(problem, sol.arg_phi[i].x.entries()));
        pj["b"] = json_vec(to_reported(problem, sol.arg_phi[i].b.entries()));
        pairs.push_back(pj);
    }
    r["arg_phi"] = Json{{"total_count", sol.arg_phi_total}, {"listed", listed}, {"pairs", pairs}};

    // verification block
    const CauchyGram psi = build_psi(s);
    const Mat inv = psi_inverse(psi);
    const Mat prod = psi.entries * inv;
    double inv_residual = max_abs(prod - Mat::identity(s.n()));

    bool checkerboard_ok = true;
    for (int i = 0; i < s.n(); ++i)
        for (int j = 0; j < s.n(); ++j) {
            const double want = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            if (inv(i, j) * want <= 0.0) checkerboard_ok = false;
        }

    const Gramian g_star = build_gramian(s, sol.v_star);
    double lyap = 0.0;
    for (int i = 0; i < s.n(); ++i)
        for (int j = 0; j < s.n(); ++j) {
            const double lhs =
                (s.eigenvalues[i] + s.eigenvalues[j]) * g_star.w(i, j);
            lyap = std::max(lyap, std::abs(lhs - sol.v_star[i] * sol.v_star[j]));
        }

    const PairCheck pc = check_pairs(s, sol);
    double cert_min = certificate.front();
    for (double q : certificate) cert_min = std::min(cert_min, q);

    Json v;
    v["psi_inverse_residual"] = json_number(inv_residual);
    v["checkerboard_ok"] = checkerboard_ok;
    v["positivity_certificate_min"] = json_number(cert_min);
    v["lyapunov_residual"] = json_number(lyap);
    v["max_stationarity_r1"] = json_number(pc.max_r1);
    v["max_stationarity_r2"] = json_number(pc.max_r2);
    v["sign_pattern_ok"] = pc.sign_ok;
    v["modulus_match_max_dev"] = json_number(pc.modulus_dev);
    const bool all_ok = checkerboard_ok && pc.sign_ok && cert_min > 0.0 &&
                        pc.max_r1 <= 1e-9 && pc.max_r2 <= 1e-9 && pc.modulus_dev < 1e-6;
    v["all_passed"] = all_ok;
    r["verification"] = v;
    return r;
}

Json verify_report(const ResolvedProblem& problem, int restarts, std::uint64_t seed,
                   double residual_tol, double horizon, bool& all_passed) {
    const Spectrum& s = problem.spectrum;
    const MinimaxSolution sol = solve(s);
    const int n = s.n();

    Json props = Json::array();
    auto push_prop = [&props](const std::string& name, bool pass, const Json& details) {
        Json p;
        p["name"] = name;
        p["pass"] = pass;
        for (const auto& [k, val] : details.items()) p[k] = val;
        props.push_back(p);
    };

    // multi-start ascent: every run must converge onto some sigma v*
    std::mt19937_64 rng(seed);
    int converged_runs = 0;
    double max_match_err = 0.0;
    double max_xi_err = 0.0;
    double max_r1 = 0.0, max_r2 = 0.0;
    bool signs_ok = true;
    double modulus_dev = 0.0;
    std::set<std::vector<int>> found_patterns;
    for (int run = 0; run < restarts; ++run) {
        const UnitVector start = random_unit_in_z(n, rng);
        AscentConfig cfg{start};
        cfg.gradient_tol = std::min(1e-10, residual_tol / 10.0);
        const AscentTrace trace = ascend(s, cfg);
        if (trace.converged) ++converged_runs;

        const UnitVector& be = trace.final_point;
        std::vector<int> pattern(n);
        double match = 0.0;
        for (int i = 0; i < n; ++i) {
            pattern[i] = be[i] >= 0 ? 1 : -1;
            match = std::max(match, std::abs(std::abs(be[i]) - sol.v_star[i]));
        }
        found_patterns.insert(pattern);
        max_match_err = std::max(max_match_err, match);
        max_xi_err = std::max(max_xi_err, std::abs(trace.final_xi - sol.xi_star));

        const auto [r1, r2] = critical_residual(s, be);
        max_r1 = std::max(max_r1, r1);
        max_r2 = std::max(max_r2, r2);

        const Eigenpair pair = smallest_eigenpair(build_gramian(s, be));
        const std::vector<int> star = sigma_star_signs(n);
        int direction = 0;
        for (int i = 0; i < n; ++i) {
            const int sx = pair.vector[i] > 0 ? 1 : (pair.vector[i] < 0 ? -1 : 0);
            const int want = star[i] * pattern[i];
            const int d = sx == want ? 1 : -1;
            if (sx == 0) signs_ok = false;
            if (direction == 0) direction = d;
            if (d != direction) signs_ok = false;
            modulus_dev = std::max(modulus_dev,
                                   std::abs(std::abs(pair.vector[i]) - std::abs(be[i])));
        }
    }
    const bool multistart_ok = converged_runs == restarts && max_match_err <= 1e-5;
    push_prop("multistart_recovery", multistart_ok,
              Json{{"restarts", restarts},
                   {"converged", converged_runs},
                   {"distinct_sign_patterns", found_patterns.size()},
                   {"max_entrywise_match_error", json_number(max_match_err)}});
    push_prop("xi_consistency", max_xi_err <= 1e-9,
              Json{{"max_abs_xi_error", json_number(max_xi_err)},
                   {"xi_star", json_number(sol.xi_star)}});
    const PairCheck pc = check_pairs(s, sol);
    push_prop("stationarity_residuals",
              std::max({max_r1, max_r2, pc.max_r1, pc.max_r2}) <= residual_tol,
              Json{{"max_r1", json_number(std::max(max_r1, pc.max_r1))},
                   {"max_r2", json_number(std::max(max_r2, pc.max_r2))},
                   {"tolerance", json_number(residual_tol)}});
    push_prop("sign_pattern", signs_ok && pc.sign_ok,
              Json{{"optimizer_points_ok", signs_ok}, {"enumerated_pairs_ok", pc.sign_ok}});
    push_prop("modulus_match", std::max(modulus_dev, pc.modulus_dev) < 1e-6,
              Json{{"max_deviation", json_number(std::max(modulus_dev, pc.modulus_dev))}});

    // saddle sampling: worst_energy(b') >= phi - tol and energy(x', v*) <= phi + tol
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto random_unit = [&]() {
        Vec v(n);
        double norm = 0.0;
        do {
            for (double& x : v) x = gauss(rng);
            norm = norm2(v);
        } while (norm < 1e-6);
        for (double& x : v) x /= norm;
        return UnitVector::normalized(std::move(v));
    };
    bool saddle_ok = true;
    double min_worst = std::numeric_limits<double>::infinity();
    double max_energy = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const double we = worst_energy(build_gramian(s, random_unit()));
        min_worst = std::min(min_worst, we);
        if (we < sol.phi - 1e-9) saddle_ok = false;
        const double e = energy_at(s, random_unit(), sol.v_star);
        max_energy = std::max(max_energy, e);
        if (e > sol.phi + 1e-9) saddle_ok = false;
    }
    push_prop("saddle_consistency", saddle_ok,
              Json{{"min_sampled_worst_energy", json_number(min_worst)},
                   {"max_sampled_energy_at_v_star", json_number(max_energy)},
                   {"phi", json_number(sol.phi)}});

    // end-to-end energy at one optimal pair
    const OptimalPair& pair = sol.arg_phi.front();
    const double sim_horizon = horizon > 0.0 ? horizon : default_horizon(s);
    const Trajectory traj = min_energy_control(s, pair.b, pair.x.entries(), sim_horizon);
    const double energy_err = std::abs(traj.total_energy - sol.phi) / sol.phi;
    const bool sim_ok = energy_err <= 1e-3 && !traj.horizon_too_short;
    push_prop("energy_simulation", sim_ok,
              Json{{"horizon", json_number(sim_horizon)},
                   {"simulated_energy", json_number(traj.total_energy)},
                   {"phi", json_number(sol.phi)},
                   {"relative_error", json_number(energy_err)},
                   {"terminal_error", json_number(traj.terminal_error)},
                   {"initial_error", json_number(traj.initial_error)}});

    all_passed = true;
    for (const auto& prop : props)
        if (!prop.at("pass").get<bool>()) all_passed = false;

    Json r;
    r["command"] = "verify";
    r["mode"] = problem.rational_mode ? "rational" : "float";
    r["n"] = n;
    r["spectrum"] = json_vec(s.eigenvalues);
    r["phi"] = json_number(sol.phi);
    r["xi_star"] = json_number(sol.xi_star);
    r["seed"] = seed;
    r["properties"] = props;
    r["all_passed"] = all_passed;
    return r;
}

Json energy_report(const ResolvedProblem& problem, const ProblemFile& file, double horizon,
                   std::ostream* csv_out) {
    const Spectrum& s = problem.spectrum;
    const MinimaxSolution sol = solve(s);

    UnitVector b_diag = sol.v_star;
    if (file.actuator) {
        if (static_cast<int>(file.actuator->size()) != s.n())
            fail(ErrorKind::DimensionMismatch, "actuator dimension mismatch");
        b_diag = UnitVector::normalized(to_diagonal(problem, *file.actuator));
    }
    Vec x0_diag;
    if (file.x0) {
        if (static_cast<int>(file.x0->size()) != s.n())
            fail(ErrorKind::DimensionMismatch, "x0 dimension mismatch");
        x0_diag = to_diagonal(problem, *file.x0);
    } else {
        // worst case for the chosen actuator: the eigenvector of W(b) for
        // its smallest eigenvalue
        x0_diag = smallest_eigenpair(build_gramian(s, b_diag)).vector.entries();
    }

    const double sim_horizon = horizon > 0.0 ? horizon : default_horizon(s);
    ControlConfig cfg;
    const Trajectory traj = min_energy_control(s, b_diag, x0_diag, sim_horizon, cfg);

    const double x0_norm = norm2(x0_diag);
    double predicted = std::numeric_limits<double>::infinity();
    if (b_diag.in_z() && x0_norm > 0.0) {
        const UnitVector x0_unit = UnitVector::normalized(x0_diag);
        predicted = energy_at(s, x0_unit, b_diag) * x0_norm * x0_norm;
    }

    Json r;
    r["command"] = "energy";
    r["mode"] = problem.rational_mode ? "rational" : "float";
    r["coordinates"] = problem.system ? "original" : "diagonal";
    r["horizon"] = json_number(sim_horizon);
    r["actuator"] = json_vec(to_reported(problem, b_diag.entries()));
    r["x0"] = json_vec(to_reported(problem, x0_diag));
    r["total_energy"] = json_number(traj.total_energy);
    r["predicted_energy"] = json_number(predicted);
    r["phi"] = json_number(sol.phi);
    r["terminal_error"] = json_number(traj.terminal_error);
    r["initial_error"] = json_number(traj.initial_error);
    r["horizon_too_short"] = traj.horizon_too_short;
    r["samples"] = traj.time.size();

    if (csv_out) {
        if (problem.system) {
            Trajectory reported = traj;
            for (auto& state : reported.states) state = to_reported(problem, state);
            write_trajectory_csv(*csv_out, reported);
        } else {
            write_trajectory_csv(*csv_out, traj);
        }
    }
    return r;
}

Json optimize_report(const ResolvedProblem& problem, std::uint64_t seed, double gradient_tol,
                     std::ostream* csv_out) {
    const Spectrum& s = problem.spectrum;
    std::mt19937_64 rng(seed);
    AscentConfig cfg{random_unit_in_z(s.n(), rng)};
    if (gradient_tol > 0.0) cfg.gradient_tol = gradient_tol;
    const AscentTrace trace = ascend(s, cfg);
    const MinimaxSolution sol = solve(s);

    double match = 0.0;
    for (int i = 0; i < s.n(); ++i)
        match = std::max(match, std::abs(std::abs(trace.final_point[i]) - sol.v_star[i]));

    Json r;
    r["command"] = "optimize";
    r["n"] = s.n();
    r["spectrum"] = json_vec(s.eigenvalues);
    r["seed"] = seed;
    r["converged"] = trace.converged;
    r["iterations"] = trace.iterates.size() - 1;
    r["final_b"] = json_vec(trace.final_point.entries());
    r["final_xi"] = json_number(trace.final_xi);
    r["final_gradient_norm"] = json_number(trace.final_gradient_norm);
    r["xi_star_closed_form"] = json_number(sol.xi_star);
    r["entrywise_match_to_critical_point"] = json_number(match);

    if (csv_out) {
        *csv_out << "iter,xi,gradient_norm";
        for (int i = 1; i <= s.n(); ++i) *csv_out << ",b_" << i;
        *csv_out << '\n';
        for (size_t k = 0; k < trace.iterates.size(); ++k) {
            std::vector<double> row;
            row.push_back(static_cast<double>(k));
            row.push_back(trace.iterates[k].xi);
            row.push_back(trace.iterates[k].gradient_norm);
            for (int i = 0; i < s.n(); ++i) row.push_back(trace.iterates[k].b[i]);
            append_csv_row(*csv_out, row);
        }
    }
    return r;
}

void write_sweep_csv(std::ostream& os, const ResolvedProblem& problem, int resolution) {
    const Spectrum& s = problem.spectrum;
    if (resolution < 2) fail(ErrorKind::InvalidInput, "resolution must be at least 2");
    const int n = s.n();
    if (n == 2) {
        os << "theta,b_1,b_2,xi\n";
        const double two_pi = 2.0 * std::acos(-1.0);
        for (int k = 0; k < resolution; ++k) {
            const double theta = two_pi * k / resolution;
            const Vec b{std::cos(theta), std::sin(theta)};
            const double value = xi(s, UnitVector::normalized(b));
            append_csv_row(os, {theta, b[0], b[1], value});
        }
    } else if (n == 3) {
        os << "theta,phi,b_1,b_2,b_3,xi\n";
        const double pi = std::acos(-1.0);
        for (int i = 0; i <= resolution; ++i) {
            const double theta = pi * i / resolution;
            for (int j = 0; j < 2 * resolution; ++j) {
                const double phi = pi * j / resolution;
                const Vec b{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                            std::cos(theta)};
                const double value = xi(s, UnitVector::normalized(b));
                append_csv_row(os, {theta, phi, b[0], b[1], b[2], value});
            }
        }
    } else {
        fail(ErrorKind::UnsupportedDimension, "sweep supports n = 2 or 3 only");
    }
}

Json error_json(ErrorKind kind, const std::string& message) {
    Json r;
    r["error"] = Json{{"kind", to_string(kind)}, {"message", message}};
    return r;
}

}  // namespace wce
