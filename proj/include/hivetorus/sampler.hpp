// SPDX-License-Identifier: MIT
// Hit-and-run sampling from sparse polytopes, in particular P_n(s).
//
// A chain moves along a random line through the current point and lands at a
// uniform point of the chord cut out by the body.  Directions are standard
// Gaussian vectors, projected onto the mean-zero subspace when the body lives
// there, then normalized.  Row values A x are carried along incrementally and
// recomputed from scratch every kResyncInterval steps to stop round-off drift.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <boost/random/normal_distribution.hpp>
#include <vector>

#include "hivetorus/polytope_model.hpp"
#include "hivetorus/rng.hpp"

namespace hivetorus {

// Sparse row with at most four nonzeros.  Slots at and beyond nnz must hold
// index 0 and coefficient 0 because the sampler evaluates all four slots.
struct SparseRow {
  int nnz = 0;
  std::array<int, 4> idx{};
  std::array<double, 4> coef{};
  double rhs = 0.0;

  double dot(const std::vector<double>& x) const {
    double acc = 0.0;
    for (int k = 0; k < nnz; ++k) {
      acc += coef[static_cast<std::size_t>(k)] *
             x[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
    }
    return acc;
  }
};

// {x in R^dim : row . x <= rhs for every row}, intersected with the
// hyperplane sum x = 0 when mean_zero is set.  outer_radius bounds the
// Euclidean norm of every point of the body.
struct LinearBody {
  int dim = 0;
  bool mean_zero = false;
  std::vector<SparseRow> rows;
  double outer_radius = std::numeric_limits<double>::infinity();

  int intrinsic_dimension() const { return mean_zero ? dim - 1 : dim; }
  // Largest r with the centered ball of radius r inside the body.
  double inner_radius() const;
  bool contains(const std::vector<double>& x, double tol) const;
};

// P_n(s) as a LinearBody.  Every x in P_n(s) obeys ||x||_inf <= 2 max(s) n^2
// (second differences along any lattice line are at least -2 max(s), which
// caps slopes at 2 max(s) n and the oscillation at 2 max(s) n^2), hence
// ||x||_2 <= 2 max(s) n^3.  Requires the MeanZero variant.
LinearBody body_from_constraints(const ConstraintSystem& sys);

// The cube [-1/2, 1/2]^m, used to calibrate volume estimation.
LinearBody centered_cube(int m);

struct Chord {
  double t_lo = 0.0;
  double t_hi = 0.0;
  bool bounded = true;
};

// Maximal interval of t with x + t d in the body (ignoring the hyperplane,
// which d is assumed to respect).  Throws PreconditionError when x violates
// a row by more than tol or when d is identically zero.
Chord chord(const LinearBody& body, const std::vector<double>& x,
            const std::vector<double>& d, double tol = 1e-9);
Chord chord(const ConstraintSystem& sys, const TorusField& x, const TorusField& d);

class HitAndRunChain {
 public:
  static constexpr long kResyncInterval = 512;

  HitAndRunChain(const LinearBody& body, std::uint64_t seed,
                 std::vector<double> start);

  // Restrict the walk to the centered ball of this radius (infinity for none).
  void set_ball_radius(double r) { ball_radius_ = r; }
  double ball_radius() const { return ball_radius_; }

  void step();
  void run(long steps) {
    for (long k = 0; k < steps; ++k) step();
  }
  // Recompute cached quantities from the current point, re-centering the
  // mean for mean-zero bodies.
  void resync();

  const std::vector<double>& point() const { return x_; }
  double norm_squared() const { return norm2_; }
  long steps_taken() const { return steps_; }

 private:
  const LinearBody& body_;
  Xoshiro256 rng_;
  boost::random::normal_distribution<double> normal_{0.0, 1.0};
  std::vector<double> x_;
  std::vector<double> ax_;
  std::vector<double> d_;
  std::vector<double> ad_;
  double norm2_ = 0.0;
  double ball_radius_ = std::numeric_limits<double>::infinity();
  long steps_ = 0;
};

struct SamplerConfig {
  std::uint64_t master_seed = 0;
  long burn_in = 0;
  long thinning = 1;
  int chains = 1;

  // Burn-in 20 n^4 and thinning n^2.
  static SamplerConfig defaults(int n, std::uint64_t seed);
};

struct SampleBatch {
  int n = 0;
  HessianBound bound;
  SamplerConfig config;
  std::vector<TorusField> samples;
  std::vector<int> chain_of;  // chain id per sample
};

// count samples, chain c contributing count/chains (+1 for the first
// count % chains chains).  Deterministic in (config, count) regardless of
// thread scheduling.  Throws InvalidArgument for a bad config and
// PreconditionError if the zero field is not interior.
SampleBatch sample_uniform(const ConstraintSystem& sys, const SamplerConfig& cfg,
                           int count);

// CSV layout: "# schema ..." line, a key=value header line, then one row of
// n^2 values per sample.
void write_batch_csv(const SampleBatch& batch, std::ostream& os);

}  // namespace hivetorus
