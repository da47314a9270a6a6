// SPDX-License-Identifier: MIT
// Concentration sweep over torus sizes and its CSV report.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hivetorus/polytope_model.hpp"

namespace hivetorus {

// Per-sample statistics the sweep can report.
enum class Statistic {
  LinfOverN2,        // ||g||_inf / n^2, median and 90% quantile
  L2OverN3,          // ||g||_2 / n^3, median
  Sobolev,           // ||g||_{L^2_2} / n, mean
  DominantModeMass,  // |theta_{k0 l0}|^2 / sum |theta|^2, mean
};

std::string to_string(Statistic s);
Statistic parse_statistic(const std::string& name);
std::vector<Statistic> all_statistics();

struct ExperimentConfig {
  std::vector<int> n_list;
  HessianBound s{2.0, 2.0, 2.0};
  int samples = 200;
  std::uint64_t seed = 1;
  std::string output_dir;  // empty for no file output
  std::vector<Statistic> statistics = all_statistics();
  long burn_in = 0;   // 0 picks 20 n^4
  long thinning = 0;  // 0 picks n^2
  int chains = 1;

  // Throws InvalidArgument unless n_list is nonempty, strictly ascending,
  // every n >= 2 and samples >= 1.
  void validate() const;
};

struct ConcentrationRow {
  int n = 0;
  int samples = 0;
  long burn_in = 0;
  long thinning = 0;
  std::vector<std::string> columns;  // statistic column names
  std::vector<double> values;        // same order as columns
  double wall_time_s = 0.0;

  double value(const std::string& column) const;
};

struct ConcentrationReport {
  ExperimentConfig config;
  std::vector<ConcentrationRow> rows;
};

// Column names produced by a statistic list, in report order.
std::vector<std::string> statistic_columns(const std::vector<Statistic>& stats);

ConcentrationReport run_concentration(const ExperimentConfig& cfg);

// The first line is a comment carrying the schema and configuration; the
// second is the header.  Wall time is the last column and the only one that
// varies between identical runs.
void write_concentration_csv(const ConcentrationReport& report, std::ostream& os,
                             bool include_wall_time = true);

// Least-squares slope of log(value) against log(n).
double fit_exponent(const std::vector<int>& ns, const std::vector<double>& values);

double quantile(std::vector<double> values, double q);

}  // namespace hivetorus
