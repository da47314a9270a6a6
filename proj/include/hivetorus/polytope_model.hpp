// SPDX-License-Identifier: MIT
// The polytopes P_n(s) (mean-zero) and its anchored twin (g(0) = 0), the
// quadratic reference q(s), the l-infinity diameter witness and the cone
// predicate on weight triples.
#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "hivetorus/difference_ops.hpp"
#include "hivetorus/lattice_torus.hpp"

namespace hivetorus {

class HessianBound {
 public:
  HessianBound() = default;
  HessianBound(double s0, double s1, double s2) : s_{s0, s1, s2} {}
  explicit HessianBound(const std::array<double, 3>& s) : s_(s) {}

  double operator[](int r) const { return s_[static_cast<std::size_t>(r)]; }
  const std::array<double, 3>& values() const { return s_; }
  bool positive() const { return s_[0] > 0 && s_[1] > 0 && s_[2] > 0; }
  // True when 2 = s0 <= s1 <= s2.
  bool normalized() const {
    return s_[0] == 2.0 && s_[0] <= s_[1] && s_[1] <= s_[2];
  }
  double min() const;
  double max() const;
  HessianBound scaled(double lambda) const {
    return {lambda * s_[0], lambda * s_[1], lambda * s_[2]};
  }

 private:
  std::array<double, 3> s_{0.0, 0.0, 0.0};
};

enum class Variant { MeanZero, Anchored };

// One inequality sum_k coef[k] * g(idx[k]) <= rhs.  Coefficients of repeated
// vertices are merged, so nnz can be below 4 on tiny tori.
struct ConstraintRow {
  int cls = 0;
  int anchor = 0;
  int nnz = 0;
  std::array<int, 4> idx{};
  std::array<double, 4> coef{};
  double rhs = 0.0;

  double evaluate(const std::vector<double>& g) const {
    double acc = 0.0;
    for (int k = 0; k < nnz; ++k) {
      acc += coef[static_cast<std::size_t>(k)] *
             g[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
    }
    return acc;
  }
};

struct ConstraintSystem {
  TorusGrid grid{2};
  HessianBound bound;
  Variant variant = Variant::MeanZero;
  std::vector<ConstraintRow> rows;  // 3 n^2 rows, class-major then anchor

  int n() const { return grid.n(); }
  int dimension() const { return grid.size() - 1; }
  // Residual of the single equality: mean of g, or g(0) when anchored.
  double equality_residual(const TorusField& g) const;
};

// Throws InvalidArgument when n < 2 or some s_r <= 0.
ConstraintSystem build_constraints(int n, const HessianBound& s,
                                   Variant variant = Variant::MeanZero);

struct Membership {
  bool inside = false;
  double max_violation = 0.0;
};

// inside iff every row holds within tol and the equality holds within tol.
// Throws SizeMismatch for a field of the wrong size.
Membership membership(const ConstraintSystem& sys, const TorusField& f,
                      double tol = 1e-9);

// Plain-text export: one inequality per line, then the equality.
void write_lp(const ConstraintSystem& sys, std::ostream& os);

// Q(x, y) = alpha x^2 + beta x y + gamma y^2 + a x + b y on Z^2.
struct QuadraticReference {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double a = 0.0;
  double b = 0.0;
  int n = 0;

  double operator()(double x, double y) const {
    return alpha * x * x + beta * x * y + gamma * y * y + a * x + b * y;
  }
};

// The unique quadratic with class-r Hessian identically -s_r and
// Q(0,0) = Q(n,0) = Q(0,n) = 0.  Nonnegativity of s is not required.
QuadraticReference quadratic_reference(const HessianBound& s, int n);

// r - q + kappa: r interpolates q linearly on the triangles of the coarse
// lattice nZ^2 (each coarse cell split along its (1,1) diagonal) and kappa
// removes the mean.
TorusField diameter_witness(int n, const HessianBound& s);

// The lower bound (s1 + s2) floor(n/2)^2 / 4 met by the witness.
double diameter_lower_bound(int n, const HessianBound& s);

// Strict test w0^2 + w1^2 + w2^2 < 2 (w0 w1 + w1 w2 + w2 w0).
bool cone_predicate(const WeightTriple& w);

}  // namespace hivetorus
