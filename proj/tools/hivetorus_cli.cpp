// SPDX-License-Identifier: MIT
// Command-line front end.
//
// Shared flags (--n, --s, --seed, --samples, --burn-in, --thin, --chains,
// --out, --json, --csv, --svg) live on the top-level app and fall through
// from every subcommand, so a flat key=value file given with --config can
// set them.  Subcommand-only flags are set in the file as section.key.
//
// Exit codes: 0 success, 1 usage error, 2 numerical failure.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hivetorus/errors.hpp"
#include "hivetorus/experiments.hpp"
#include "hivetorus/hive_lr.hpp"
#include "hivetorus/honeycomb.hpp"
#include "hivetorus/polytope_model.hpp"
#include "hivetorus/sampler.hpp"
#include "hivetorus/schema.hpp"
#include "hivetorus/spectral_analysis.hpp"
#include "hivetorus/volume_estimator.hpp"

namespace ht = hivetorus;
using nlohmann::json;

namespace {

struct Common {
  int n = 4;
  std::vector<double> s{2.0, 2.0, 2.0};
  std::optional<std::uint64_t> seed;
  int samples = 0;  // 0 picks a per-command default
  long burn_in = -1;
  long thin = 0;
  int chains = 1;
  std::string out;
  bool as_json = false;
  bool as_csv = false;
  std::string svg;
};

ht::HessianBound bound_of(const Common& c) {
  if (c.s.size() != 3) throw ht::InvalidArgument("--s needs three comma-separated values");
  return {c.s[0], c.s[1], c.s[2]};
}

std::uint64_t require_seed(const Common& c, const std::string& cmd) {
  if (!c.seed) throw ht::InvalidArgument(cmd + " is randomized and needs an explicit --seed");
  return *c.seed;
}

json bound_json(const ht::HessianBound& s) { return {s[0], s[1], s[2]}; }

// Writes to DIR/name when --out is set, otherwise to stdout.
void emit(const Common& c, const std::string& name, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::create_directories(c.out);
  const std::filesystem::path path = std::filesystem::path(c.out) / name;
  std::ofstream f(path);
  if (!f) throw ht::Error("cannot open " + path.string() + " for writing");
  f << text;
  std::cerr << "wrote " << path.string() << '\n';
}

ht::SamplerConfig sampler_config(const Common& c, std::uint64_t seed) {
  ht::SamplerConfig cfg = ht::SamplerConfig::defaults(c.n, seed);
  if (c.burn_in >= 0) cfg.burn_in = c.burn_in;
  if (c.thin > 0) cfg.thinning = c.thin;
  cfg.chains = c.chains;
  return cfg;
}

int run_sample(const Common& c) {
  const std::uint64_t seed = require_seed(c, "sample");
  const ht::ConstraintSystem sys = ht::build_constraints(c.n, bound_of(c));
  const ht::SampleBatch batch =
      ht::sample_uniform(sys, sampler_config(c, seed), c.samples > 0 ? c.samples : 100);
  if (c.as_json) {
    json j;
    j["schema"] = ht::kSamplesSchema;
    j["n"] = c.n;
    j["s"] = bound_json(batch.bound);
    j["seed"] = seed;
    j["burn_in"] = batch.config.burn_in;
    j["thinning"] = batch.config.thinning;
    j["chains"] = batch.config.chains;
    j["chain_of"] = batch.chain_of;
    json rows = json::array();
    for (const auto& g : batch.samples) rows.push_back(g.values());
    j["samples"] = std::move(rows);
    emit(c, "samples.json", j.dump() + "\n");
  } else {
    std::ostringstream os;
    ht::write_batch_csv(batch, os);
    emit(c, "samples.csv", os.str());
  }
  return 0;
}

int run_spectrum(const Common& c, bool use_witness) {
  const ht::HessianBound s = bound_of(c);
  std::vector<ht::TorusField> fields;
  json source;
  if (use_witness) {
    fields.push_back(ht::diameter_witness(c.n, s));
    source = "witness";
  } else {
    const std::uint64_t seed = require_seed(c, "spectrum");
    const ht::ConstraintSystem sys = ht::build_constraints(c.n, s);
    fields = ht::sample_uniform(sys, sampler_config(c, seed), c.samples > 0 ? c.samples : 1)
                 .samples;
    source = "sample";
  }
  std::ostringstream os;
  for (std::size_t k = 0; k < fields.size(); ++k) {
    const ht::TorusField& g = fields[k];
    const ht::Spectrum sp = ht::dft(g);
    const ht::DominantMode dm = ht::dominant_mode(g);
    double l2 = 0.0;
    for (double x : g.values()) l2 += x * x;
    json j;
    j["schema"] = ht::kSpectrumSchema;
    j["n"] = c.n;
    j["s"] = bound_json(s);
    j["source"] = source;
    j["index"] = k;
    if (c.seed) j["seed"] = *c.seed;
    j["dominant_mode"] = {dm.k, dm.l};
    j["dominant_abs"] = std::abs(dm.theta);
    j["dominant_mode_mass"] = std::norm(dm.theta) / sp.energy();
    j["parseval_l2"] = l2;
    j["parseval_spectral"] = static_cast<double>(c.n) * c.n * sp.energy();
    j["linf"] = g.max_abs();
    j["sobolev"] = ht::norm(g, ht::NormSpec::sobolev(2.0));
    j["w_norm"] = ht::norm(g, ht::NormSpec::w());
    os << j.dump() << '\n';
  }
  emit(c, "spectrum.jsonl", os.str());
  return 0;
}

int run_volume(const Common& c, const std::string& method, bool weights) {
  const ht::HessianBound s = bound_of(c);
  const ht::ConstraintSystem sys = ht::build_constraints(c.n, s);
  ht::McConfig mc;
  if (c.samples > 0) mc.samples_per_level = c.samples;
  if (c.thin > 0) mc.thinning = c.thin;
  if (c.burn_in > 0) mc.burn_in_per_level = c.burn_in;
  mc.chains = c.chains;
  ht::VolumeEstimate v;
  if (method == "exact") {
    v = ht::exact_volume_3d(sys);
  } else if (method == "mc") {
    mc.seed = require_seed(c, "volume --method mc");
    v = ht::mc_volume(sys, mc);
  } else {
    if (c.n != 2) mc.seed = require_seed(c, "volume at n > 2");
    v = ht::volume(c.n, s, mc);
  }
  json j;
  j["schema"] = ht::kReportSchema;
  j["n"] = c.n;
  j["s"] = bound_json(s);
  j["method"] = ht::to_string(v.method);
  j["volume"] = v.value;
  j["std_error"] = v.std_error;
  j["f_n"] = v.per_vertex_scale();
  j["dimension"] = v.dimension;
  j["levels"] = v.levels;
  if (c.seed) j["seed"] = *c.seed;
  if (weights) {
    if (c.n > 2) mc.seed = require_seed(c, "facet weights at n > 2");
    const ht::FacetWeights fw = ht::facet_weights(c.n, s, ht::default_fd_step(c.n, s), mc);
    const ht::DetBoundReport det = ht::det_bound_report(fw);
    j["weights"] = fw.w;
    j["weights_std_error"] = fw.std_error;
    j["euler_residual"] = fw.euler_residual;
    j["cone"] = ht::cone_predicate(fw.w);
    j["det_product"] = det.product;
    j["det_bound_ok"] = det.bound_ok;
  }
  if (c.as_csv) {
    std::ostringstream os;
    os << "# schema=" << ht::kReportSchema << '\n'
       << "n,s0,s1,s2,method,volume,std_error,f_n\n"
       << std::setprecision(17) << c.n << ',' << s[0] << ',' << s[1] << ',' << s[2] << ','
       << ht::to_string(v.method) << ',' << v.value << ',' << v.std_error << ','
       << v.per_vertex_scale() << '\n';
    emit(c, "volume.csv", os.str());
  } else {
    emit(c, "volume.json", j.dump() + "\n");
  }
  return 0;
}

int run_witness(const Common& c) {
  const ht::HessianBound s = bound_of(c);
  const ht::TorusField w = ht::diameter_witness(c.n, s);
  const ht::Membership m = ht::membership(ht::build_constraints(c.n, s), w);
  json j;
  j["schema"] = ht::kReportSchema;
  j["n"] = c.n;
  j["s"] = bound_json(s);
  j["linf"] = w.max_abs();
  j["lower_bound"] = ht::diameter_lower_bound(c.n, s);
  j["inside"] = m.inside;
  j["max_violation"] = m.max_violation;
  if (c.as_json || !c.as_csv) {
    j["field"] = w.values();
    emit(c, "witness.json", j.dump() + "\n");
  } else {
    std::ostringstream os;
    os << "# schema=" << ht::kReportSchema << "\nn,linf,lower_bound,inside,max_violation\n"
       << std::setprecision(17) << c.n << ',' << w.max_abs() << ','
       << ht::diameter_lower_bound(c.n, s) << ',' << (m.inside ? 1 : 0) << ','
       << m.max_violation << '\n';
    emit(c, "witness.csv", os.str());
  }
  return 0;
}

int run_honeycomb(const Common& c, const std::string& source) {
  const ht::HessianBound s = bound_of(c);
  ht::TorusField g(c.n);
  if (source == "witness") {
    g = ht::diameter_witness(c.n, s);
  } else if (source == "sample") {
    const std::uint64_t seed = require_seed(c, "honeycomb --field sample");
    g = ht::sample_uniform(ht::build_constraints(c.n, s), sampler_config(c, seed), 1).samples[0];
  } else if (source != "zero") {
    throw ht::InvalidArgument("--field must be zero, witness or sample");
  }
  const ht::HoneycombDiagram d = ht::build_honeycomb(g, s);
  const ht::HoneycombDiagram ref = ht::build_honeycomb(ht::TorusField(c.n), s);
  const ht::DisplacementStats st = ht::displacement_stats(d, ref);
  if (!c.svg.empty()) {
    std::string path = c.svg;
    if (!c.out.empty()) {
      std::filesystem::create_directories(c.out);
      path = (std::filesystem::path(c.out) / c.svg).string();
    }
    ht::emit_svg(d, path);
    std::cerr << "wrote " << path << '\n';
  }
  json j = json::parse(ht::honeycomb_json(d));
  j["field"] = source;
  j["displacement_max"] = st.max;
  j["displacement_mean"] = st.mean;
  j["slope_bound"] = 4.0 * c.n * s[2];
  if (c.seed) j["seed"] = *c.seed;
  emit(c, "honeycomb.json", j.dump() + "\n");
  return 0;
}

int run_lr(const std::vector<long>& lam, const std::vector<long>& mu,
           const std::vector<long>& nu, bool oracle, bool as_json) {
  const ht::HiveBoundary b = ht::make_boundary(lam, mu, nu);
  const std::uint64_t hives = ht::count_hives(b);
  std::optional<std::uint64_t> tab;
  if (oracle) tab = ht::lr_tableau_oracle(b);
  if (as_json) {
    json j;
    j["schema"] = ht::kReportSchema;
    j["lambda"] = b.lambda;
    j["mu"] = b.mu;
    j["nu"] = b.nu;
    j["hives"] = hives;
    if (tab) j["tableaux"] = *tab;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << hives << '\n';
    if (tab) std::cout << "tableaux " << *tab << '\n';
  }
  if (tab && *tab != hives) {
    std::cerr << "hive count and tableau count disagree\n";
    return 2;
  }
  return 0;
}

int run_concentrate(const Common& c, const std::vector<int>& n_list,
                    const std::vector<std::string>& stats) {
  ht::ExperimentConfig cfg;
  cfg.n_list = n_list;
  cfg.s = bound_of(c);
  cfg.samples = c.samples > 0 ? c.samples : 200;
  cfg.seed = require_seed(c, "concentrate");
  cfg.output_dir = c.out;
  if (!stats.empty()) {
    cfg.statistics.clear();
    for (const std::string& name : stats) cfg.statistics.push_back(ht::parse_statistic(name));
  }
  if (c.burn_in > 0) cfg.burn_in = c.burn_in;
  if (c.thin > 0) cfg.thinning = c.thin;
  cfg.chains = c.chains;
  const ht::ConcentrationReport report = ht::run_concentration(cfg);
  std::ostringstream os;
  ht::write_concentration_csv(report, os);
  emit(c, "concentration.csv", os.str());
  if (report.rows.size() >= 2 && !report.rows.front().columns.empty()) {
    std::vector<int> ns;
    std::vector<double> vals;
    const std::string col = report.rows.front().columns.front();
    for (const auto& r : report.rows) {
      ns.push_back(r.n);
      vals.push_back(r.values.front());
    }
    bool positive = true;
    for (double v : vals) positive = positive && v > 0.0;
    if (positive) {
      std::cerr << "fitted exponent of " << col << " in n: " << ht::fit_exponent(ns, vals)
                << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sampling, volumes, spectra, honeycombs and LR counts for bounded-Hessian "
               "functions on the triangular torus"};
  app.set_config("--config", "", "Read flat key=value defaults from a file");
  app.require_subcommand(1);
  app.fallthrough();

  Common c;
  app.add_option("--n", c.n, "Torus side length")->check(CLI::Range(2, 4096));
  app.add_option("--s", c.s, "Hessian bound s0,s1,s2")->delimiter(',')->expected(3);
  app.add_option("--seed", c.seed, "Master seed (required by randomized commands)");
  app.add_option("--samples", c.samples, "Sample count (per level for volume)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--burn-in", c.burn_in, "Burn-in steps")->check(CLI::NonNegativeNumber);
  app.add_option("--thin", c.thin, "Thinning steps")->check(CLI::NonNegativeNumber);
  app.add_option("--chains", c.chains, "Independent chains")->check(CLI::PositiveNumber);
  app.add_option("--out", c.out, "Output directory (stdout when absent)");
  auto* json_flag = app.add_flag("--json", c.as_json, "JSON output");
  auto* csv_flag = app.add_flag("--csv", c.as_csv, "CSV output");
  json_flag->excludes(csv_flag);
  app.add_option("--svg", c.svg, "SVG output file (honeycomb)");

  auto* sample = app.add_subcommand("sample", "Draw hit-and-run samples");

  auto* spectrum = app.add_subcommand("spectrum", "Character analysis of sampled fields");
  bool spectrum_witness = false;
  spectrum->add_flag("--witness", spectrum_witness, "Analyze the diameter witness instead");

  auto* volume = app.add_subcommand("volume", "Volume, facet weights and determinant check");
  std::string method = "auto";
  bool weights = false;
  volume->add_option("--method", method, "exact, mc or auto")
      ->check(CLI::IsMember({"exact", "mc", "auto"}));
  volume->add_flag("--weights", weights, "Also estimate facet weights");

  auto* witness = app.add_subcommand("witness", "Diameter witness and its lower bound");

  auto* honeycomb = app.add_subcommand("honeycomb", "Honeycomb of a hive built from a field");
  std::string field = "witness";
  honeycomb->add_option("--field", field, "zero, witness or sample")
      ->check(CLI::IsMember({"zero", "witness", "sample"}));

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient via hives");
  std::vector<long> lam, mu, nu;
  bool oracle = false;
  lr->add_option("--lam", lam, "lambda")->delimiter(',')->required();
  lr->add_option("--mu", mu, "mu")->delimiter(',')->required();
  lr->add_option("--nu", nu, "nu")->delimiter(',')->required();
  lr->add_flag("--oracle", oracle, "Cross-check with the tableau rule");

  auto* concentrate = app.add_subcommand("concentrate", "Concentration sweep over n");
  std::vector<int> n_list;
  std::vector<std::string> stats;
  concentrate->add_option("--n-list", n_list, "Ascending sizes")->delimiter(',')->required();
  concentrate->add_option("--stats", stats, "Statistic columns")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 1;
  }

  try {
    if (*sample) return run_sample(c);
    if (*spectrum) return run_spectrum(c, spectrum_witness);
    if (*volume) return run_volume(c, method, weights);
    if (*witness) return run_witness(c);
    if (*honeycomb) return run_honeycomb(c, field);
    if (*lr) return run_lr(lam, mu, nu, oracle, c.as_json);
    if (*concentrate) return run_concentrate(c, n_list, stats);
  } catch (const ht::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ht::SizeMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
