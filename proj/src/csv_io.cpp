#include "heatrec/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace heatrec {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

}  // namespace

void write_cauchy_csv(const std::string& path, const CauchyData& data) {
  std::ofstream out = open_out(path);
  out << "n,i,f,g\n";
  const int n2 = 2 * data.m_half;
  for (int n = 0; n <= data.n_max; ++n) {
    if (data.f[n].size() != n2 || data.g[n].size() != n2)
      throw std::invalid_argument("write_cauchy_csv: ragged data");
    for (int i = 0; i < n2; ++i)
      out << n << ',' << i << ',' << fmt(data.f[n][i]) << ','
          << fmt(data.g[n][i]) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

CauchyTables read_cauchy_csv(const std::string& path, int n_max, int m_half) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open data file: " + path);
  std::string line;
  if (!std::getline(in, line) || line != "n,i,f,g")
    throw std::invalid_argument("bad data header in " + path);

  const int n2 = 2 * m_half;
  CauchyTables t;
  t.f.assign(n_max + 1, Eigen::VectorXd::Constant(n2, 0.0));
  t.g.assign(n_max + 1, Eigen::VectorXd::Constant(n2, 0.0));
  std::vector<std::vector<bool>> filled(n_max + 1,
                                        std::vector<bool>(n2, false));
  long rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string tok;
    int n, i;
    double fv, gv;
    if (!std::getline(ss, tok, ',')) break;
    n = std::stoi(tok);
    if (!std::getline(ss, tok, ','))
      throw std::invalid_argument("bad data row in " + path);
    i = std::stoi(tok);
    if (!std::getline(ss, tok, ','))
      throw std::invalid_argument("bad data row in " + path);
    fv = std::stod(tok);
    if (!std::getline(ss, tok, ','))
      throw std::invalid_argument("bad data row in " + path);
    gv = std::stod(tok);
    if (n < 0 || n > n_max || i < 0 || i >= n2)
      throw std::invalid_argument(
          "data grid does not match configuration (row outside N/M range)");
    t.f[n][i] = fv;
    t.g[n][i] = gv;
    filled[n][i] = true;
    ++rows;
  }
  if (rows != static_cast<long>(n_max + 1) * n2)
    throw std::invalid_argument(
        "data grid does not match configuration (row count)");
  for (const auto& row : filled)
    for (bool b : row)
      if (!b)
        throw std::invalid_argument(
            "data grid does not match configuration (missing entries)");
  return t;
}

void write_curve_csv(const std::string& path, const Curve& curve,
                     int samples) {
  if (samples < 2) throw std::invalid_argument("write_curve_csv: samples < 2");
  std::ofstream out = open_out(path);
  out << "s,x1,x2\n";
  for (int k = 0; k < samples; ++k) {
    const double s = 2.0 * std::numbers::pi * k / samples;
    const Eigen::Vector2d p = curve.eval(s).point;
    out << fmt(s) << ',' << fmt(p.x()) << ',' << fmt(p.y()) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_history_csv(const std::string& path,
                       const std::vector<IterationRecord>& history) {
  std::ofstream out = open_out(path);
  out << "iter,lambda,update_norm,halvings,resid,err_inf,err_l2\n";
  for (const auto& rec : history) {
    out << rec.iter << ',' << fmt(rec.lambda) << ',' << fmt(rec.update_norm)
        << ',' << rec.halvings << ',';
    if (rec.resid >= 0.0) out << fmt(rec.resid);
    out << ',';
    if (rec.err_inf >= 0.0) out << fmt(rec.err_inf);
    out << ',';
    if (rec.err_l2 >= 0.0) out << fmt(rec.err_l2);
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_sidecar(const std::string& path, const RunConfig& cfg) {
  std::ofstream out = open_out(path);
  out << config_to_json(cfg);
  if (!out) throw std::runtime_error("write failed: " + path);
}

RunConfig read_sidecar(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open sidecar: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return config_from_json(ss.str());
}

}  // namespace heatrec
