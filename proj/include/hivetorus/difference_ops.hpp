// SPDX-License-Identifier: MIT
// Fields on the torus and the difference operators acting on them.
//
// First differences are forward differences along three lattice directions:
//   A_0 f(v) = f(v + (0,1)) - f(v),
//   A_1 f(v) = f(v + (1,1)) - f(v),
//   A_2 f(v) = f(v + (1,0)) - f(v).
// The discrete Hessian of class r at anchor a is -f(a) + f(b) - f(c) + f(d)
// for the class-r rhombus (a, b, c, d) of lattice_torus.hpp.
//
// Products of two first differences are rhombus stencils up to a shift of
// anchor and an overall sign.  Writing H_r for the class-r Hessian,
//   H_2(v + (1,2)) = -A_0 A_1 f(v),
//   H_0(v)         = -A_1 A_2 f(v),
//   H_1(v + (1,0)) =  A_2 A_0 f(v).
// The oriented operator D_r f(v) := -H_r(v + kFactorShift[r]) therefore
// satisfies D_2 = A_0 A_1, D_0 = A_1 A_2 and D_1 = -A_2 A_0 exactly.
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "hivetorus/lattice_torus.hpp"

namespace hivetorus {

class TorusField {
 public:
  TorusField() = default;
  explicit TorusField(int n, double fill = 0.0);
  TorusField(int n, std::vector<double> values);

  int n() const { return n_; }
  int size() const { return n_ * n_; }

  double& operator[](int v) { return values_[static_cast<std::size_t>(v)]; }
  double operator[](int v) const { return values_[static_cast<std::size_t>(v)]; }
  double& at(long i, long j) { return values_[static_cast<std::size_t>(idx(i, j))]; }
  double at(long i, long j) const {
    return values_[static_cast<std::size_t>(idx(i, j))];
  }

  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  double sum() const;
  double mean() const;
  double max_abs() const;

  TorusField& operator+=(const TorusField& o);
  TorusField& operator-=(const TorusField& o);
  TorusField& operator*=(double a);

 private:
  int idx(long i, long j) const {
    return TorusGrid::wrap(i, n_) * n_ + TorusGrid::wrap(j, n_);
  }
  int n_ = 0;
  std::vector<double> values_;
};

TorusField operator+(TorusField a, const TorusField& b);
TorusField operator-(TorusField a, const TorusField& b);
TorusField operator*(double s, TorusField a);

struct HessianField {
  int n = 0;
  std::array<std::vector<double>, 3> cls;  // cls[r][anchor]

  double at(int r, int anchor) const {
    return cls[static_cast<std::size_t>(r)][static_cast<std::size_t>(anchor)];
  }
  double max_entry() const;
  double max_abs() const;
};

// Weights (w0, w1, w2) of the weighted Laplacian.
using WeightTriple = std::array<double, 3>;

// Displacement of each first difference direction.
inline constexpr std::array<Vertex, 3> kFirstDiffDir = {{{0, 1}, {1, 1}, {1, 0}}};

// Anchor shift relating each oriented D_r to the class-r Hessian.
inline constexpr std::array<Vertex, 3> kFactorShift = {{{0, 0}, {1, 0}, {1, 2}}};

// Throws SizeMismatch when f.n() != grid.n().
HessianField hessian_field(const TorusField& f, const TorusGrid& grid);

// Class-r Hessian at a single anchor.
double hessian_at(const TorusField& f, int r, long i, long j);

// Forward difference along direction r.  Throws InvalidArgument for r outside
// {0, 1, 2}.
TorusField first_difference(const TorusField& f, int r);

// The oriented operator D_r f(v) = -H_r f(v + kFactorShift[r]).
TorusField oriented_second_difference(const TorusField& f, int r);

// 2 (Delta_w y)(i,j) = (-w0 + w1 + w2)(y(i,j+1) - 2y(i,j) + y(i,j-1))
//                    + ( w0 - w1 + w2)(y(i+1,j+1) - 2y(i,j) + y(i-1,j-1))
//                    + ( w0 + w1 - w2)(y(i+1,j) - 2y(i,j) + y(i-1,j)).
TorusField delta_w_apply(const TorusField& f, const WeightTriple& w);

struct DeltaSpectrum {
  int n = 0;
  std::vector<double> eigenvalues;  // index k*n + l
  double pseudo_determinant = 0.0;  // |product over (k,l) != (0,0)|
  double log_pseudo_determinant = 0.0;  // sum of log|lambda|, -inf if singular

  double eigenvalue(int k, int l) const {
    return eigenvalues[static_cast<std::size_t>(TorusGrid::wrap(k, n) * n +
                                                TorusGrid::wrap(l, n))];
  }
};

// Closed-form eigenvalue of Delta_w on the character psi_{kl}.
double delta_w_eigenvalue(int n, const WeightTriple& w, int k, int l);

DeltaSpectrum delta_w_spectrum(int n, const WeightTriple& w);

// Real and imaginary parts of the character psi_{kl}(i,j) = w_n^{ki + lj}.
TorusField character_re(int n, int k, int l);
TorusField character_im(int n, int k, int l);

}  // namespace hivetorus
