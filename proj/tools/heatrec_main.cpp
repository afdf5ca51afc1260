#include "heatrec/csv_io.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace heatrec;

namespace {

struct Overrides {
  std::vector<std::function<void(RunConfig&)>> apply;
};

// Registers the shared config options on a subcommand.  Each option stages
// an assignment that is applied after the config file is loaded, so the
// precedence is CLI > file > defaults.
void add_config_options(CLI::App* cmd, std::shared_ptr<Overrides> ov,
                        std::shared_ptr<std::string> config_path) {
  cmd->add_option("--config", *config_path, "JSON config file");
  auto stage = [cmd, ov](const std::string& name, auto member,
                         const std::string& desc) {
    using T = std::decay_t<decltype(std::declval<RunConfig>().*member)>;
    auto value = std::make_shared<T>();
    CLI::Option* opt = cmd->add_option(name, *value, desc);
    ov->apply.push_back([opt, value, member](RunConfig& cfg) {
      if (opt->count() > 0) cfg.*member = *value;
    });
  };
  stage("--kappa", &RunConfig::kappa, "Laguerre transform parameter");
  stage("--alpha", &RunConfig::alpha, "heat diffusivity");
  stage("--N", &RunConfig::n_max, "Laguerre truncation order");
  stage("--M", &RunConfig::m_half, "mesh parameter (2M nodes)");
  stage("--J", &RunConfig::degree, "shape basis degree");
  stage("--r0", &RunConfig::r0, "initial guess radius");
  stage("--lambda0", &RunConfig::lambda0, "initial regularization");
  stage("--lambda-decay", &RunConfig::lambda_decay,
        "regularization decay factor");
  stage("--stop-tol", &RunConfig::stop_tol, "update-norm stopping tolerance");
  stage("--max-iters", &RunConfig::max_iters, "iteration budget");
  stage("--mode", &RunConfig::mode, "final_step or multi_step");
  stage("--delta", &RunConfig::delta, "relative noise level");
  stage("--seed", &RunConfig::seed, "noise stream seed");
  stage("--gamma1", &RunConfig::gamma1, "inner (sought) curve shape");
  stage("--gamma2", &RunConfig::gamma2, "outer (measurement) curve shape");
  stage("--gamma2-radius", &RunConfig::gamma2_radius,
        "outer circle radius (circle shape only)");
  stage("--samples", &RunConfig::samples, "curve CSV resolution");
}

RunConfig resolve_config(const RunConfig& base, const std::string& config_path,
                         const Overrides& ov) {
  RunConfig cfg = base;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in)
      throw std::invalid_argument("cannot open config file: " + config_path);
    std::stringstream ss;
    ss << in.rdbuf();
    apply_json_overrides(cfg, ss.str());
  }
  for (const auto& fn : ov.apply) fn(cfg);
  validate(cfg);
  return cfg;
}

std::unique_ptr<Curve> shape_from(const RunConfig& cfg,
                                  const std::string& name) {
  return make_shape(name, cfg.gamma2_radius);
}

int run_synth(const RunConfig& cfg, const std::string& out_dir) {
  fs::create_directories(out_dir);
  const auto g1 = shape_from(cfg, cfg.gamma1);
  const auto g2 = shape_from(cfg, cfg.gamma2);
  CauchyData data =
      synthesize(*g1, *g2, cfg.kappa, cfg.alpha, cfg.n_max, cfg.m_half);
  if (cfg.delta > 0.0) data = add_noise(data, cfg.delta, cfg.seed);
  write_cauchy_csv((fs::path(out_dir) / "data.csv").string(), data);
  write_sidecar((fs::path(out_dir) / "data.json").string(), cfg);
  std::printf("synth: wrote %s/data.csv (N=%d, M=%d, delta=%g)\n",
              out_dir.c_str(), cfg.n_max, cfg.m_half, cfg.delta);
  return 0;
}

int run_invert(const RunConfig& base_from_sidecar, const RunConfig& cfg,
               const std::string& data_dir, const std::string& out_dir) {
  // The data were synthesized under the sidecar's physics/grid/geometry;
  // overriding those would silently solve a different problem.
  const RunConfig& sc = base_from_sidecar;
  if (cfg.kappa != sc.kappa || cfg.alpha != sc.alpha ||
      cfg.n_max != sc.n_max || cfg.m_half != sc.m_half ||
      cfg.gamma2 != sc.gamma2 || cfg.gamma2_radius != sc.gamma2_radius)
    throw std::invalid_argument(
        "invert: config overrides kappa/alpha/N/M/gamma2 away from the "
        "values the data were synthesized with");

  const CauchyTables data = read_cauchy_csv(
      (fs::path(data_dir) / "data.csv").string(), cfg.n_max, cfg.m_half);

  fs::create_directories(out_dir);
  const auto g2 = shape_from(cfg, cfg.gamma2);
  const auto truth = shape_from(cfg, cfg.gamma1);
  const InversionConfig inv = make_inversion_config(cfg);
  const ReconState state =
      reconstruct(inv, *g2, data.f, data.g, truth.get());

  write_history_csv((fs::path(out_dir) / "history.csv").string(),
                    state.history);
  for (std::size_t k = 0; k < state.coeff_history.size(); ++k) {
    char name[32];
    std::snprintf(name, sizeof name, "iter_%03zu.csv", k);
    const TrigRadialCurve curve(state.coeff_history[k]);
    write_curve_csv((fs::path(out_dir) / name).string(), curve, cfg.samples);
  }

  nlohmann::json summary;
  summary["converged"] = state.converged;
  summary["iterations"] = state.iterations;
  summary["stop_reason"] = state.stop_reason;
  summary["mode"] = cfg.mode;
  summary["final_coeffs"] = std::vector<double>(
      state.coeffs.data(), state.coeffs.data() + state.coeffs.size());
  if (!state.history.empty() && state.history.back().err_inf >= 0.0) {
    summary["final_err_inf"] = state.history.back().err_inf;
    summary["final_err_l2"] = state.history.back().err_l2;
  }
  summary["config"] = nlohmann::json::parse(config_to_json(cfg));
  std::ofstream out(fs::path(out_dir) / "summary.json");
  if (!out) throw std::runtime_error("cannot write summary.json");
  out << summary.dump(2) << "\n";

  std::printf("invert: %d iterations, converged=%s, stop=%s",
              state.iterations, state.converged ? "true" : "false",
              state.stop_reason.c_str());
  if (!state.history.empty() && state.history.back().err_inf >= 0.0)
    std::printf(", err_inf=%.3g", state.history.back().err_inf);
  std::printf(" -> %s\n", out_dir.c_str());
  return 0;
}

int run_curves(const RunConfig& cfg, const std::string& out_dir) {
  fs::create_directories(out_dir);
  for (const std::string& name : {cfg.gamma1, cfg.gamma2}) {
    const auto c = shape_from(cfg, name);
    write_curve_csv((fs::path(out_dir) / (name + ".csv")).string(), *c,
                    cfg.samples);
  }
  std::printf("curves: wrote %s/{%s,%s}.csv\n", out_dir.c_str(),
              cfg.gamma1.c_str(), cfg.gamma2.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Boundary reconstruction for the heat equation in a doubly "
      "connected domain: data synthesis, inversion, and curve export"};
  app.require_subcommand(1);

  auto synth_ov = std::make_shared<Overrides>();
  auto synth_cfgpath = std::make_shared<std::string>();
  auto invert_ov = std::make_shared<Overrides>();
  auto invert_cfgpath = std::make_shared<std::string>();
  auto curves_ov = std::make_shared<Overrides>();
  auto curves_cfgpath = std::make_shared<std::string>();

  std::string synth_out = "out", invert_out = "out", curves_out = "out";
  std::string invert_data;

  CLI::App* synth = app.add_subcommand("synth", "synthesize Cauchy data");
  add_config_options(synth, synth_ov, synth_cfgpath);
  synth->add_option("--out", synth_out, "output directory");

  CLI::App* invert =
      app.add_subcommand("invert", "reconstruct the inner curve from data");
  add_config_options(invert, invert_ov, invert_cfgpath);
  invert->add_option("--data", invert_data, "directory with data.csv/.json")
      ->required();
  invert->add_option("--out", invert_out, "output directory");

  CLI::App* curves = app.add_subcommand("curves", "export shape CSVs");
  add_config_options(curves, curves_ov, curves_cfgpath);
  curves->add_option("--out", curves_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (synth->parsed())
      return run_synth(resolve_config(RunConfig{}, *synth_cfgpath, *synth_ov),
                       synth_out);
    if (invert->parsed()) {
      const RunConfig sidecar =
          read_sidecar((fs::path(invert_data) / "data.json").string());
      return run_invert(sidecar,
                        resolve_config(sidecar, *invert_cfgpath, *invert_ov),
                        invert_data, invert_out);
    }
    if (curves->parsed())
      return run_curves(
          resolve_config(RunConfig{}, *curves_cfgpath, *curves_ov),
          curves_out);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
