// SPDX-License-Identifier: MIT
// Character analysis of torus fields, norms and seminorms, dominant modes,
// mode smoothing and the coarse Hessian of a square partition.
//
// Characters are psi_{kl}(i,j) = w_n^{ki + lj} with w_n = exp(2 pi i / n).
// The transform is theta_{kl} = n^-2 sum_v g(v) conj(psi_{kl}(v)), so that
// g = sum theta_{kl} psi_{kl} and ||g||_2^2 = n^2 sum |theta_{kl}|^2.
#pragma once

#include <array>
#include <complex>
#include <vector>

#include "hivetorus/difference_ops.hpp"
#include "hivetorus/lattice_torus.hpp"
#include "hivetorus/polytope_model.hpp"

namespace hivetorus {

struct Spectrum {
  int n = 0;
  std::vector<std::complex<double>> theta;  // index k*n + l

  std::complex<double> at(int k, int l) const {
    return theta[static_cast<std::size_t>(TorusGrid::wrap(k, n) * n +
                                          TorusGrid::wrap(l, n))];
  }
  double energy() const;  // sum |theta|^2
};

// Direct O(n^4) transform and its inverse.  The inverse keeps the real part.
Spectrum dft(const TorusField& f);
TorusField idft(const Spectrum& sp);

enum class NormKind { Lp, Linf, Sobolev, W, Ck };

struct NormSpec {
  NormKind kind = NormKind::Linf;
  double p = 2.0;  // Lp and Sobolev
  int k = 1;       // Ck

  static NormSpec lp(double p) { return {NormKind::Lp, p, 1}; }
  static NormSpec linf() { return {NormKind::Linf, 2.0, 1}; }
  static NormSpec sobolev(double p) { return {NormKind::Sobolev, p, 1}; }
  static NormSpec w() { return {NormKind::W, 2.0, 1}; }
  static NormSpec ck(int k) { return {NormKind::Ck, 2.0, k}; }
};

// lp:       (sum |g|^p)^(1/p)
// linf:     max |g|
// sobolev:  (sum_v sum_r |H_r g(v)|^p)^(1/p) over the class-r Hessians
// W:        (1/2) (sum_v |A_0^2 g(v)|^2 + |A_2^2 g(v)|^2)^(1/2)
// ck:       max over words r_1..r_k in {0, 2} of ||A_{r_1} ... A_{r_k} g||_inf
// Throws InvalidArgument for p < 1 or k < 1.
double norm(const TorusField& f, const NormSpec& spec);

struct DominantMode {
  int k = 0;
  int l = 0;
  std::complex<double> theta;
};

// The nonzero mode of largest |theta|; ties go to the smallest k^2 + l^2 and
// then to the lexicographically smallest (k, l), with k, l in [0, n).
// Throws PreconditionError for a constant field.
DominantMode dominant_mode(const TorusField& f);

// Convolution with (psi_{k0 l0} + psi_{-k0,-l0} + 2) / (2 n^2), which equals
// Re(theta_{k0 l0} psi_{k0 l0}) for a zero-mean real field.  Throws
// PreconditionError when |mean| exceeds 1e-9 (1 + ||f||_inf).
TorusField mode_smooth(const TorusField& f, int k0, int l0);

// Re(theta psi_{kl}) built from the transform, for cross-checks.
TorusField mode_projection(const TorusField& f, int k0, int l0);

// Average of f over the translated square [1, n1]^2, i.e. Phi * f with
// Phi = indicator of [1, n1]^2 divided by n1^2.
TorusField box_smooth(const TorusField& f, int n1);

// Per-square triples t_ij.  With h = Phi * f and anchor c of square (i, j),
// c = o + (i n1 + 1, j n1 + 1) for 1-based (i, j) so that h(c) is the average
// of f over the square,
//   t_r = s_r - (H_r h(c + e_r) + H_r h(c + e'_r)) / 2
// where the two anchor offsets of each class place the rhombus centres
// symmetrically about c: (-1,0),(-1,-1) for class 0, (1,0),(0,-1) for
// class 1 and (1,1),(0,1) for class 2.  For f in P_n(s) every entry is >= 0.
struct CoarseHessianField {
  int per_side = 0;
  std::vector<std::array<double, 3>> t;  // index (i-1)*per_side + (j-1)
  std::vector<int> anchors;              // flat anchor c per square

  const std::array<double, 3>& at(int i, int j) const {
    return t[static_cast<std::size_t>((i - 1) * per_side + (j - 1))];
  }
};

inline constexpr std::array<std::array<Vertex, 2>, 3> kCoarseAnchorOffsets = {{
    {{{-1, 0}, {-1, -1}}},
    {{{1, 0}, {0, -1}}},
    {{{1, 1}, {0, 1}}},
}};

// Throws SizeMismatch when the partition was built for another n.
CoarseHessianField coarse_hessian(const TorusField& f, const SquarePartition& part,
                                  const HessianBound& s);

// Multiplier m_r(k, l) with t_r - s_r = m_r * h(c) for f = Re(theta psi_{kl}):
//   m_0 = Re((w^k - 1)(1 - w^-(k+l))),  m_1 = Re(-(w^k - 1)(w^l - 1)),
//   m_2 = Re((w^l - 1)(1 - w^-(k+l))).
std::array<double, 3> coarse_mode_multiplier(int n, int k, int l);

// (sqrt(3) eps0 n / (8 s2))^(2/p) (eps0 n^2 / 2), the l_p lower bound for a
// field with ||x||_inf >= eps0 n^2.
double lp_lower_bound(int n, double eps0, double s2, double p);

}  // namespace hivetorus
