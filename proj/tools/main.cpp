#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wce/report.hpp"

namespace {

struct CommonOptions {
    std::string input;
    std::string output = "-";
    std::string format = "json";
    std::string mode;
    std::uint64_t seed = 0;
    int restarts = 50;
    double tolerance = 0.0;  // 0 = defaults from the problem file or built-ins
    double horizon = 0.0;    // 0 = 40 / lambda_1
    int resolution = 1024;
    std::uint64_t arg_phi_cap = 128;
    bool timing = false;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--input", opt.input, "problem JSON file ('-' for stdin)")->required();
    cmd->add_option("--output", opt.output, "output file ('-' for stdout)");
    cmd->add_option("--format", opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--mode", opt.mode, "float or rational (default: auto)")
        ->check(CLI::IsMember({"float", "rational"}));
    cmd->add_option("--seed", opt.seed, "RNG seed for restarts and sampling");
    cmd->add_option("--tolerance", opt.tolerance, "residual/gradient tolerance override");
    // timing is opt-in so that default reports stay byte-identical across runs
    cmd->add_flag("--timing", opt.timing, "append wall-clock timing to the report");
}

wce::Json read_problem_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) wce::fail(wce::ErrorKind::InvalidInput, "cannot open input file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return wce::Json::parse(text);
    } catch (const std::exception& e) {
        wce::fail(wce::ErrorKind::InvalidInput, std::string("JSON parse error: ") + e.what());
    }
}

class OutputStream {
public:
    explicit OutputStream(const std::string& target) {
        if (target != "-") {
            file_.open(target);
            if (!file_)
                wce::fail(wce::ErrorKind::InvalidInput, "cannot open output file: " + target);
        }
    }
    std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void emit(std::ostream& os, const wce::Json& j) { os << j.dump(2) << '\n'; }

int exit_code_for(const wce::Error& e) {
    return e.kind() == wce::ErrorKind::InternalInvariantViolation ? 3 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal single-actuator design minimizing worst-case control energy "
                 "for completely unstable symmetric linear systems"};
    app.require_subcommand(1);

    CommonOptions opt;
    CLI::App* solve = app.add_subcommand("solve", "closed-form phi, v*, arg phi");
    add_common_flags(solve, opt);
    solve->add_option("--arg-phi-cap", opt.arg_phi_cap,
                      "max arg-phi pairs listed in the report (default 128)");

    CLI::App* verify = app.add_subcommand(
        "verify", "multi-start ascent, residual and sign-pattern checks, energy simulation");
    add_common_flags(verify, opt);
    verify->add_option("--restarts", opt.restarts, "number of random restarts (default 50)");
    verify->add_option("--horizon", opt.horizon, "simulation horizon (default 40/lambda_1)");

    CLI::App* sweep = app.add_subcommand("sweep", "CSV landscape of xi(b) for n = 2 or 3");
    add_common_flags(sweep, opt);
    sweep->add_option("--resolution", opt.resolution, "grid resolution (default 1024)");

    CLI::App* energy =
        app.add_subcommand("energy", "minimum-energy steering simulation for one actuator");
    add_common_flags(energy, opt);
    energy->add_option("--horizon", opt.horizon, "simulation horizon (default 40/lambda_1)");

    CLI::App* optimize = app.add_subcommand("optimize", "single gradient ascent with trace");
    add_common_flags(optimize, opt);

    CLI11_PARSE(app, argc, argv);

    const auto t_start = std::chrono::steady_clock::now();
    try {
        OutputStream out(opt.output);
        const wce::ProblemFile file = wce::parse_problem(read_problem_json(opt.input));
        const wce::ResolvedProblem problem = wce::resolve_problem(file, opt.mode);

        const double residual_tol =
            opt.tolerance > 0.0 ? opt.tolerance
                                : (file.residual_tol && *file.residual_tol > 0.0 ? *file.residual_tol
                                                                                 : 1e-9);
        const double gradient_tol =
            opt.tolerance > 0.0 ? opt.tolerance
                                : (file.gradient_tol && *file.gradient_tol > 0.0 ? *file.gradient_tol
                                                                                 : 1e-10);

        wce::Json report;
        int rc = 0;
        if (*solve) {
            report = wce::solve_report(problem, opt.arg_phi_cap);
        } else if (*verify) {
            bool all_passed = false;
            report = wce::verify_report(problem, opt.restarts, opt.seed, residual_tol,
                                        opt.horizon, all_passed);
            if (!all_passed) rc = 1;
        } else if (*sweep) {
            wce::write_sweep_csv(out.get(), problem, opt.resolution);
            return 0;
        } else if (*energy) {
            if (opt.format == "csv") {
                wce::energy_report(problem, file, opt.horizon, &out.get());
                return 0;
            }
            report = wce::energy_report(problem, file, opt.horizon, nullptr);
        } else if (*optimize) {
            if (opt.format == "csv") {
                wce::optimize_report(problem, opt.seed, gradient_tol, &out.get());
                return 0;
            }
            report = wce::optimize_report(problem, opt.seed, gradient_tol, nullptr);
        }

        if (opt.timing) {
            const auto elapsed = std::chrono::steady_clock::now() - t_start;
            report["timing_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        }
        emit(out.get(), report);
        return rc;
    } catch (const wce::Error& e) {
        wce::Json err = wce::error_json(e.kind(), e.what());
        try {
            OutputStream out(opt.output);
            emit(out.get(), err);
        } catch (...) {
            emit(std::cerr, err);
        }
        return exit_code_for(e);
    } catch (const std::exception& e) {
        emit(std::cerr, wce::error_json(wce::ErrorKind::InvalidInput, e.what()));
        return 2;
    }
}
