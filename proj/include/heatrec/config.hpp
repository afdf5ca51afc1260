#pragma once

#include "heatrec/data_solver.hpp"
#include "heatrec/inversion.hpp"

#include <cstdint>
#include <string>

namespace heatrec {

// Flat run configuration shared by all CLI subcommands.  Defaults are the
// reference experiment: unit heat coefficients, peanut inside the unit
// circle, N = 10, M = 64, J = 5, r0 = 0.4, final-step updates.
struct RunConfig {
  double kappa = 1.0;
  double alpha = 1.0;
  int n_max = 10;   // key "N"
  int m_half = 64;  // key "M"
  int degree = 5;   // key "J"
  double r0 = 0.4;
  double lambda0 = 1e-4;
  double lambda_decay = 0.9;
  double stop_tol = 1e-6;
  int max_iters = 50;
  std::string mode = "final_step";  // or "multi_step"
  double delta = 0.0;
  std::uint64_t seed = 1;
  std::string gamma1 = "peanut";
  std::string gamma2 = "circle";
  double gamma2_radius = 1.0;
  int samples = 256;  // resolution of exported curve CSVs
};

// Throws std::invalid_argument on the first violated rule (M < 4, J >= M,
// N < 0, r0 <= 0, lambda0 <= 0, delta < 0, nonpositive physics constants,
// decay outside (0,1], bad mode string, unknown shape names, ...).
void validate(const RunConfig& cfg);

// JSON round trip (exact key set; unknown keys are rejected so typos fail
// loudly).  Keys: kappa, alpha, N, M, J, r0, lambda0, lambda_decay,
// stop_tol, max_iters, mode, delta, seed, gamma1, gamma2, gamma2_radius,
// samples.
std::string config_to_json(const RunConfig& cfg);
RunConfig config_from_json(const std::string& text);

// Merge JSON text over an existing config (only the keys present).
void apply_json_overrides(RunConfig& cfg, const std::string& text);

SolveMode parse_mode(const std::string& mode);

InversionConfig make_inversion_config(const RunConfig& cfg);

}  // namespace heatrec
