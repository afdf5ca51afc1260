#pragma once

#include "heatrec/config.hpp"
#include "heatrec/synthesis.hpp"

#include <string>
#include <vector>

namespace heatrec {

// All numeric CSV output is printed with %.17g so that reading the file
// back reproduces every double bit-exactly.

// data.csv: header "n,i,f,g", one row per (order, node).
void write_cauchy_csv(const std::string& path, const CauchyData& data);

// Reads f/g nodal vectors; validates the (N+1) x 2M shape.
struct CauchyTables {
  std::vector<Eigen::VectorXd> f, g;
};
CauchyTables read_cauchy_csv(const std::string& path, int n_max, int m_half);

// Curve sample CSV: header "s,x1,x2", `samples` rows at s = 2 pi k / samples
// (no duplicated end point).
void write_curve_csv(const std::string& path, const Curve& curve,
                     int samples);

// history.csv: header "iter,lambda,update_norm,halvings,resid,err_inf,err_l2";
// error columns are empty when no truth curve was available.
void write_history_csv(const std::string& path,
                       const std::vector<IterationRecord>& history);

// JSON sidecar carrying the full RunConfig (reruns are bit-identical).
void write_sidecar(const std::string& path, const RunConfig& cfg);
RunConfig read_sidecar(const std::string& path);

}  // namespace heatrec
