#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "wce/cauchy.hpp"
#include "wce/minimax.hpp"
#include "wce/spectrum.hpp"

namespace wce {

using Json = nlohmann::ordered_json;

// Parsed problem description: exactly one of eigenvalues/matrix, plus
// optional mode, tolerances and simulation overrides.
struct ProblemFile {
    std::optional<Vec> eigenvalues;
    std::optional<exact::RatVec> eigenvalues_exact;  // set when every entry is a small rational
    std::optional<Mat> matrix;
    std::string mode;  // "float", "rational" or "" (auto)
    std::optional<double> gradient_tol;
    std::optional<double> residual_tol;
    std::optional<double> terminal_tol;
    std::optional<Vec> actuator;  // energy subcommand override
    std::optional<Vec> x0;        // energy subcommand override
};

ProblemFile parse_problem(const Json& j);

// Problem reduced to diagonal coordinates, with the eigenbasis kept around
// for pulling actuators back when the input was a matrix.
struct ResolvedProblem {
    Spectrum spectrum;
    std::optional<SymmetricSystem> system;
    bool rational_mode = false;
    std::optional<exact::RatVec> rational_spectrum;
};

// mode_flag (from the command line) wins over the file's "mode"; empty means
// auto: exact mode activates when all eigenvalues are small rationals and
// n <= 10.
ResolvedProblem resolve_problem(const ProblemFile& problem, const std::string& mode_flag);

Json solve_report(const ResolvedProblem& problem, std::uint64_t arg_phi_cap);

// Multi-start verification pipeline; all_passed reports the overall verdict
// (CLI exit code 1 when false).
Json verify_report(const ResolvedProblem& problem, int restarts, std::uint64_t seed,
                   double residual_tol, double horizon, bool& all_passed);

Json energy_report(const ResolvedProblem& problem, const ProblemFile& file, double horizon,
                   std::ostream* csv_out);

Json optimize_report(const ResolvedProblem& problem, std::uint64_t seed, double gradient_tol,
                     std::ostream* csv_out);

void write_sweep_csv(std::ostream& os, const ResolvedProblem& problem, int resolution);

Json error_json(ErrorKind kind, const std::string& message);

}  // namespace wce
