#include "heatrec/config.hpp"

#include "heatrec/geometry.hpp"

#include <nlohmann/json.hpp>

#include <set>
#include <stdexcept>

namespace heatrec {

namespace {

const std::set<std::string> kShapes = {
    "circle", "peanut", "apple", "rounded_rectangle", "kite1", "kite2"};

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.kappa <= 0.0) throw std::invalid_argument("config: kappa must be > 0");
  if (cfg.alpha <= 0.0) throw std::invalid_argument("config: alpha must be > 0");
  if (cfg.n_max < 0) throw std::invalid_argument("config: N must be >= 0");
  if (cfg.m_half < 4) throw std::invalid_argument("config: M must be >= 4");
  if (cfg.degree < 0) throw std::invalid_argument("config: J must be >= 0");
  if (cfg.degree >= cfg.m_half)
    throw std::invalid_argument("config: J must be < M");
  if (cfg.r0 <= 0.0) throw std::invalid_argument("config: r0 must be > 0");
  if (cfg.lambda0 <= 0.0)
    throw std::invalid_argument("config: lambda0 must be > 0");
  if (!(cfg.lambda_decay > 0.0 && cfg.lambda_decay <= 1.0))
    throw std::invalid_argument("config: lambda_decay must be in (0, 1]");
  if (cfg.stop_tol <= 0.0)
    throw std::invalid_argument("config: stop_tol must be > 0");
  if (cfg.max_iters < 0)
    throw std::invalid_argument("config: max_iters must be >= 0");
  if (cfg.mode != "final_step" && cfg.mode != "multi_step")
    throw std::invalid_argument(
        "config: mode must be 'final_step' or 'multi_step'");
  if (cfg.delta < 0.0) throw std::invalid_argument("config: delta must be >= 0");
  if (!kShapes.count(cfg.gamma1))
    throw std::invalid_argument("config: unknown gamma1 shape '" + cfg.gamma1 +
                                "'");
  if (!kShapes.count(cfg.gamma2))
    throw std::invalid_argument("config: unknown gamma2 shape '" + cfg.gamma2 +
                                "'");
  if (cfg.gamma2_radius <= 0.0)
    throw std::invalid_argument("config: gamma2_radius must be > 0");
  if (cfg.samples < 2)
    throw std::invalid_argument("config: samples must be >= 2");
}

std::string config_to_json(const RunConfig& cfg) {
  nlohmann::json j;
  j["kappa"] = cfg.kappa;
  j["alpha"] = cfg.alpha;
  j["N"] = cfg.n_max;
  j["M"] = cfg.m_half;
  j["J"] = cfg.degree;
  j["r0"] = cfg.r0;
  j["lambda0"] = cfg.lambda0;
  j["lambda_decay"] = cfg.lambda_decay;
  j["stop_tol"] = cfg.stop_tol;
  j["max_iters"] = cfg.max_iters;
  j["mode"] = cfg.mode;
  j["delta"] = cfg.delta;
  j["seed"] = cfg.seed;
  j["gamma1"] = cfg.gamma1;
  j["gamma2"] = cfg.gamma2;
  j["gamma2_radius"] = cfg.gamma2_radius;
  j["samples"] = cfg.samples;
  return j.dump(2) + "\n";
}

void apply_json_overrides(RunConfig& cfg, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") +
                                e.what());
  }
  if (!j.is_object())
    throw std::invalid_argument("config: JSON root must be an object");
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "kappa") cfg.kappa = value.get<double>();
      else if (key == "alpha") cfg.alpha = value.get<double>();
      else if (key == "N") cfg.n_max = value.get<int>();
      else if (key == "M") cfg.m_half = value.get<int>();
      else if (key == "J") cfg.degree = value.get<int>();
      else if (key == "r0") cfg.r0 = value.get<double>();
      else if (key == "lambda0") cfg.lambda0 = value.get<double>();
      else if (key == "lambda_decay") cfg.lambda_decay = value.get<double>();
      else if (key == "stop_tol") cfg.stop_tol = value.get<double>();
      else if (key == "max_iters") cfg.max_iters = value.get<int>();
      else if (key == "mode") cfg.mode = value.get<std::string>();
      else if (key == "delta") cfg.delta = value.get<double>();
      else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
      else if (key == "gamma1") cfg.gamma1 = value.get<std::string>();
      else if (key == "gamma2") cfg.gamma2 = value.get<std::string>();
      else if (key == "gamma2_radius") cfg.gamma2_radius = value.get<double>();
      else if (key == "samples") cfg.samples = value.get<int>();
      else
        throw std::invalid_argument("config: unknown key '" + key + "'");
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("config: bad value for key '" + key +
                                  "': " + e.what());
    }
  }
}

RunConfig config_from_json(const std::string& text) {
  RunConfig cfg;
  apply_json_overrides(cfg, text);
  return cfg;
}

SolveMode parse_mode(const std::string& mode) {
  if (mode == "final_step") return SolveMode::kFinalStep;
  if (mode == "multi_step") return SolveMode::kMultiStep;
  throw std::invalid_argument("config: unknown mode '" + mode + "'");
}

InversionConfig make_inversion_config(const RunConfig& cfg) {
  InversionConfig inv;
  inv.kappa = cfg.kappa;
  inv.alpha = cfg.alpha;
  inv.n_max = cfg.n_max;
  inv.m_half = cfg.m_half;
  inv.degree = cfg.degree;
  inv.r0 = cfg.r0;
  inv.lambda0 = cfg.lambda0;
  inv.lambda_decay = cfg.lambda_decay;
  inv.mode = parse_mode(cfg.mode);
  inv.max_iters = cfg.max_iters;
  inv.stop_tol = cfg.stop_tol;
  inv.delta = cfg.delta;
  return inv;
}

}  // namespace heatrec
