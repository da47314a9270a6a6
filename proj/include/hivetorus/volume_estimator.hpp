// SPDX-License-Identifier: MIT
// Volumes of P_n(s): exact in dimension 3 (n = 2), annealed Monte Carlo
// otherwise, facet weights by central differences and the Delta_w
// determinant diagnostic.
//
// Volumes are m-dimensional Lebesgue measure inside the hyperplane
// sum g = 0, m = n^2 - 1.
#pragma once

#include <cstdint>
#include <string>

#include "hivetorus/difference_ops.hpp"
#include "hivetorus/polytope_model.hpp"
#include "hivetorus/sampler.hpp"

namespace hivetorus {

enum class VolumeMethod { Exact3d, MonteCarlo };

std::string to_string(VolumeMethod m);

struct VolumeEstimate {
  double value = 0.0;
  double std_error = 0.0;
  VolumeMethod method = VolumeMethod::Exact3d;
  long samples = 0;      // total counted samples (0 for exact)
  int levels = 0;        // annealing levels (0 for exact)
  int dimension = 0;     // m
  double per_vertex_scale() const;  // value^(1/m), the quantity f_n(s)
};

// Vertex enumeration over all row triples in an orthonormal basis of the
// mean-zero plane, then volume as a sum of cones from the origin over the
// facets.  Throws InvalidArgument unless n = 2 and the variant is MeanZero.
VolumeEstimate exact_volume_3d(const ConstraintSystem& sys);

struct McConfig {
  std::uint64_t seed = 1;
  long samples_per_level = 4000;
  long thinning = 0;         // 0 means the intrinsic dimension
  long burn_in_per_level = 0;  // 0 means 10 times the thinning
  int batches = 20;          // batch means for the standard error
  int chains = 1;
};

// Annealing over balls B(r_i) centred at the origin: r_0 is the inner radius
// of the body, r_{i+1} = 2^(1/m) r_i, stopping once r_i reaches the outer
// radius.  Each ratio vol(K_{i-1}) / vol(K_i), K_i = body cap B(r_i), is the
// fraction of hit-and-run samples of K_i lying in B(r_{i-1}).
VolumeEstimate mc_volume(const LinearBody& body, const McConfig& cfg);
VolumeEstimate mc_volume(const ConstraintSystem& sys, const McConfig& cfg);

// Exact for n = 2, Monte Carlo otherwise.
VolumeEstimate volume(int n, const HessianBound& s, const McConfig& cfg);

// Ratio vol(P_n(s_small)) / vol(P_n(s_big)) for s_small <= s_big
// componentwise, by sampling the larger body.  Returns (ratio, std error).
std::pair<double, double> nested_ratio(int n, const HessianBound& s_big,
                                       const HessianBound& s_small,
                                       const McConfig& cfg);

struct FacetWeights {
  WeightTriple w{};           // n^-2 d|P| / ds_r
  WeightTriple normalized{};  // w / |P|
  WeightTriple std_error{};   // standard error of w
  int n = 0;
  HessianBound s;
  double h = 0.0;
  VolumeEstimate volume;
  // sum_r s_r w_r / |P| - (n^2 - 1) / n^2; zero by homogeneity.
  double euler_residual = 0.0;
};

// Default step: 1e-3 min(s) for exact volumes, 0.05 min(s) otherwise.
double default_fd_step(int n, const HessianBound& s);

// Central differences (|P(s + h e_r)| - |P(s - h e_r)|) / (2 h n^2).  For
// n >= 3 both differences are formed from nested ratios against |P(s)|, which
// share seeds (common random numbers) across the three classes.
FacetWeights facet_weights(int n, const HessianBound& s, double h,
                           const McConfig& cfg = {});

struct DetBoundReport {
  double product = 0.0;  // |Delta_w_hat|^(1/m) |P_n(s)|^(1/m)
  bool bound_ok = false; // product <= 2e
  FacetWeights weights;
};

DetBoundReport det_bound_report(int n, const HessianBound& s,
                                const McConfig& cfg = {});
DetBoundReport det_bound_report(const FacetWeights& weights);

// Volume of the unit-radius ball in dimension m.
double unit_ball_volume(int m);

}  // namespace hivetorus
