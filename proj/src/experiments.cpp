// SPDX-License-Identifier: MIT
#include "hivetorus/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "hivetorus/errors.hpp"
#include "hivetorus/sampler.hpp"
#include "hivetorus/schema.hpp"
#include "hivetorus/spectral_analysis.hpp"

namespace hivetorus {

std::string to_string(Statistic s) {
  switch (s) {
    case Statistic::LinfOverN2:
      return "linf_over_n2";
    case Statistic::L2OverN3:
      return "l2_over_n3";
    case Statistic::Sobolev:
      return "sobolev";
    case Statistic::DominantModeMass:
      return "dominant_mode_mass";
  }
  return "unknown";
}

Statistic parse_statistic(const std::string& name) {
  for (Statistic s : all_statistics()) {
    if (to_string(s) == name) return s;
  }
  throw InvalidArgument("unknown statistic: " + name);
}

std::vector<Statistic> all_statistics() {
  return {Statistic::LinfOverN2, Statistic::L2OverN3, Statistic::Sobolev,
          Statistic::DominantModeMass};
}

void ExperimentConfig::validate() const {
  if (n_list.empty()) throw InvalidArgument("n_list must not be empty");
  for (std::size_t k = 0; k < n_list.size(); ++k) {
    if (n_list[k] < 2) throw InvalidArgument("every n must be at least 2");
    if (k > 0 && n_list[k] <= n_list[k - 1]) {
      throw InvalidArgument("n_list must be strictly ascending");
    }
  }
  if (samples < 1) throw InvalidArgument("samples must be at least 1");
  if (statistics.empty()) throw InvalidArgument("statistic list must not be empty");
  if (burn_in < 0 || thinning < 0) throw InvalidArgument("negative burn-in or thinning");
  if (chains < 1) throw InvalidArgument("chains must be at least 1");
  if (!s.positive()) throw InvalidArgument("Hessian bound must be positive");
}

double ConcentrationRow::value(const std::string& column) const {
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (columns[k] == column) return values[k];
  }
  throw InvalidArgument("no column named " + column);
}

std::vector<std::string> statistic_columns(const std::vector<Statistic>& stats) {
  std::vector<std::string> out;
  for (Statistic s : stats) {
    switch (s) {
      case Statistic::LinfOverN2:
        out.emplace_back("linf_over_n2_median");
        out.emplace_back("linf_over_n2_q90");
        break;
      case Statistic::L2OverN3:
        out.emplace_back("l2_over_n3_median");
        break;
      case Statistic::Sobolev:
        out.emplace_back("sobolev_over_n_mean");
        break;
      case Statistic::DominantModeMass:
        out.emplace_back("dominant_mode_mass_mean");
        break;
    }
  }
  return out;
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw InvalidArgument("quantile of an empty sample");
  if (!(q >= 0.0 && q <= 1.0)) throw InvalidArgument("quantile level must lie in [0, 1]");
  std::sort(values.begin(), values.end());
  // Linear interpolation between order statistics.
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

namespace {

double mean(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x;
  return acc / static_cast<double>(v.size());
}

double dominant_mode_mass(const TorusField& g) {
  const Spectrum sp = dft(g);
  const double total = sp.energy();
  if (total <= 0.0) return 0.0;
  const DominantMode dm = dominant_mode(g);
  return std::norm(dm.theta) / total;
}

}  // namespace

ConcentrationReport run_concentration(const ExperimentConfig& cfg) {
  cfg.validate();
  ConcentrationReport report;
  report.config = cfg;
  const std::vector<std::string> columns = statistic_columns(cfg.statistics);
  for (std::size_t cell = 0; cell < cfg.n_list.size(); ++cell) {
    const int n = cfg.n_list[cell];
    const auto start = std::chrono::steady_clock::now();
    const ConstraintSystem sys = build_constraints(n, cfg.s, Variant::MeanZero);
    SamplerConfig sc = SamplerConfig::defaults(n, derive_seed(cfg.seed, static_cast<std::uint64_t>(n)));
    if (cfg.burn_in > 0) sc.burn_in = cfg.burn_in;
    if (cfg.thinning > 0) sc.thinning = cfg.thinning;
    sc.chains = cfg.chains;
    const SampleBatch batch = sample_uniform(sys, sc, cfg.samples);

    const double n2 = static_cast<double>(n) * n;
    std::vector<double> linf, l2, sob, mass;
    for (const TorusField& g : batch.samples) {
      linf.push_back(g.max_abs() / n2);
      l2.push_back(norm(g, NormSpec::lp(2.0)) / (n2 * n));
      sob.push_back(norm(g, NormSpec::sobolev(2.0)) / n);
      mass.push_back(dominant_mode_mass(g));
    }

    ConcentrationRow row;
    row.n = n;
    row.samples = static_cast<int>(batch.samples.size());
    row.burn_in = sc.burn_in;
    row.thinning = sc.thinning;
    row.columns = columns;
    for (Statistic s : cfg.statistics) {
      switch (s) {
        case Statistic::LinfOverN2:
          row.values.push_back(quantile(linf, 0.5));
          row.values.push_back(quantile(linf, 0.9));
          break;
        case Statistic::L2OverN3:
          row.values.push_back(quantile(l2, 0.5));
          break;
        case Statistic::Sobolev:
          row.values.push_back(mean(sob));
          break;
        case Statistic::DominantModeMass:
          row.values.push_back(mean(mass));
          break;
      }
    }
    row.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.rows.push_back(std::move(row));
  }
  return report;
}

void write_concentration_csv(const ConcentrationReport& report, std::ostream& os,
                             bool include_wall_time) {
  const ExperimentConfig& c = report.config;
  os << "# schema=" << kConcentrationSchema << " seed=" << c.seed << " s=" << c.s[0] << ','
     << c.s[1] << ',' << c.s[2] << " samples=" << c.samples << " chains=" << c.chains
     << '\n';
  os << "n,samples,burn_in,thinning";
  for (const std::string& col : statistic_columns(c.statistics)) os << ',' << col;
  if (include_wall_time) os << ",wall_time_s";
  os << '\n';
  os << std::setprecision(17);
  for (const ConcentrationRow& r : report.rows) {
    os << r.n << ',' << r.samples << ',' << r.burn_in << ',' << r.thinning;
    for (double v : r.values) os << ',' << v;
    if (include_wall_time) os << ',' << std::setprecision(6) << r.wall_time_s << std::setprecision(17);
    os << '\n';
  }
}

double fit_exponent(const std::vector<int>& ns, const std::vector<double>& values) {
  if (ns.size() != values.size()) throw SizeMismatch("fit_exponent: length mismatch");
  if (ns.size() < 2) throw InvalidArgument("fit_exponent needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(ns.size());
  for (std::size_t k = 0; k < ns.size(); ++k) {
    if (ns[k] <= 0 || !(values[k] > 0.0)) {
      throw InvalidArgument("fit_exponent needs positive n and values");
    }
    const double x = std::log(static_cast<double>(ns[k]));
    const double y = std::log(values[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double den = m * sxx - sx * sx;
  if (std::abs(den) < 1e-300) throw NumericalError("fit_exponent: degenerate abscissae");
  return (m * sxy - sx * sy) / den;
}

}  // namespace hivetorus
