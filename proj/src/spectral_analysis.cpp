// SPDX-License-Identifier: MIT
#include "hivetorus/spectral_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hivetorus/errors.hpp"

namespace hivetorus {

namespace {

// Table of w_n^m for m in [0, n).
std::vector<std::complex<double>> roots_of_unity(int n) {
  std::vector<std::complex<double>> w(static_cast<std::size_t>(n));
  const double t = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (int m = 0; m < n; ++m) {
    w[static_cast<std::size_t>(m)] = std::polar(1.0, t * m);
  }
  return w;
}

double pow_abs(double x, double p) { return std::pow(std::abs(x), p); }

}  // namespace

double Spectrum::energy() const {
  double e = 0.0;
  for (const auto& c : theta) e += std::norm(c);
  return e;
}

Spectrum dft(const TorusField& f) {
  const int n = f.n();
  const auto w = roots_of_unity(n);
  Spectrum sp;
  sp.n = n;
  sp.theta.assign(static_cast<std::size_t>(n * n), {0.0, 0.0});
  const double scale = 1.0 / (static_cast<double>(n) * n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      std::complex<double> acc{0.0, 0.0};
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const int e = (k * i + l * j) % n;
          acc += f.at(i, j) * std::conj(w[static_cast<std::size_t>(e)]);
        }
      }
      sp.theta[static_cast<std::size_t>(k * n + l)] = acc * scale;
    }
  }
  return sp;
}

TorusField idft(const Spectrum& sp) {
  const int n = sp.n;
  const auto w = roots_of_unity(n);
  TorusField f(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::complex<double> acc{0.0, 0.0};
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const int e = (k * i + l * j) % n;
          acc += sp.theta[static_cast<std::size_t>(k * n + l)] *
                 w[static_cast<std::size_t>(e)];
        }
      }
      f.at(i, j) = acc.real();
    }
  }
  return f;
}

double norm(const TorusField& f, const NormSpec& spec) {
  switch (spec.kind) {
    case NormKind::Lp: {
      if (!(spec.p >= 1.0)) throw InvalidArgument("norm exponent p must be >= 1");
      double acc = 0.0;
      for (double x : f.values()) acc += pow_abs(x, spec.p);
      return std::pow(acc, 1.0 / spec.p);
    }
    case NormKind::Linf:
      return f.max_abs();
    case NormKind::Sobolev: {
      if (!(spec.p >= 1.0)) throw InvalidArgument("norm exponent p must be >= 1");
      const HessianField h = hessian_field(f, TorusGrid(f.n()));
      double acc = 0.0;
      for (const auto& c : h.cls) {
        for (double x : c) acc += pow_abs(x, spec.p);
      }
      return std::pow(acc, 1.0 / spec.p);
    }
    case NormKind::W: {
      const TorusField a0 = first_difference(first_difference(f, 0), 0);
      const TorusField a2 = first_difference(first_difference(f, 2), 2);
      double acc = 0.0;
      for (int v = 0; v < f.size(); ++v) acc += a0[v] * a0[v] + a2[v] * a2[v];
      return 0.5 * std::sqrt(acc);
    }
    case NormKind::Ck: {
      if (spec.k < 1) throw InvalidArgument("seminorm order k must be >= 1");
      // A_0 and A_2 commute, so a word is determined by how many A_0 it holds.
      double best = 0.0;
      for (int a = 0; a <= spec.k; ++a) {
        TorusField g = f;
        for (int t = 0; t < a; ++t) g = first_difference(g, 0);
        for (int t = a; t < spec.k; ++t) g = first_difference(g, 2);
        best = std::max(best, g.max_abs());
      }
      return best;
    }
  }
  throw InvalidArgument("unknown norm kind");
}

DominantMode dominant_mode(const TorusField& f) {
  const Spectrum sp = dft(f);
  const int n = sp.n;
  const double scale = std::max(1.0, f.max_abs());
  DominantMode best;
  double best_abs = -1.0;
  long best_r2 = 0;
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      if (k == 0 && l == 0) continue;
      const double a = std::abs(sp.at(k, l));
      const long r2 = static_cast<long>(k) * k + static_cast<long>(l) * l;
      // Magnitudes equal up to round-off count as ties.
      const double eps = 1e-12 * scale;
      const bool better = a > best_abs + eps ||
                          (std::abs(a - best_abs) <= eps && r2 < best_r2);
      if (better) {
        best_abs = a;
        best_r2 = r2;
        best = {k, l, sp.at(k, l)};
      }
    }
  }
  if (best_abs <= 1e-12 * scale) {
    throw PreconditionError("dominant mode is undefined for a constant field");
  }
  return best;
}

TorusField mode_smooth(const TorusField& f, int k0, int l0) {
  const int n = f.n();
  if (std::abs(f.mean()) > 1e-9 * (1.0 + f.max_abs())) {
    throw PreconditionError("mode smoothing requires a zero-mean field");
  }
  // Kernel K(u) = (psi(u) + conj psi(u) + 2) / (2 n^2) = (cos + 1) / n^2.
  const double t = 2.0 * std::numbers::pi / static_cast<double>(n);
  std::vector<double> kernel(static_cast<std::size_t>(n * n));
  const double inv = 1.0 / (static_cast<double>(n) * n);
  const int k = TorusGrid::wrap(k0, n);
  const int l = TorusGrid::wrap(l0, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      kernel[static_cast<std::size_t>(i * n + j)] =
          (std::cos(t * ((k * i + l * j) % n)) + 1.0) * inv;
    }
  }
  TorusField out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int a = 0; a < n; ++a) {
        const int di = TorusGrid::wrap(i - a, n);
        for (int b = 0; b < n; ++b) {
          const int dj = TorusGrid::wrap(j - b, n);
          acc += f.at(a, b) * kernel[static_cast<std::size_t>(di * n + dj)];
        }
      }
      out.at(i, j) = acc;
    }
  }
  return out;
}

TorusField mode_projection(const TorusField& f, int k0, int l0) {
  const int n = f.n();
  const Spectrum sp = dft(f);
  const std::complex<double> th = sp.at(k0, l0);
  const double t = 2.0 * std::numbers::pi / static_cast<double>(n);
  const int k = TorusGrid::wrap(k0, n);
  const int l = TorusGrid::wrap(l0, n);
  TorusField out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.at(i, j) = (th * std::polar(1.0, t * ((k * i + l * j) % n))).real();
    }
  }
  return out;
}

TorusField box_smooth(const TorusField& f, int n1) {
  const int n = f.n();
  if (n1 < 1 || n1 > n) throw InvalidArgument("box size must lie in [1, n]");
  TorusField out(n);
  const double inv = 1.0 / (static_cast<double>(n1) * n1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int a = 1; a <= n1; ++a) {
        for (int b = 1; b <= n1; ++b) acc += f.at(i - a, j - b);
      }
      out.at(i, j) = acc * inv;
    }
  }
  return out;
}

CoarseHessianField coarse_hessian(const TorusField& f, const SquarePartition& part,
                                  const HessianBound& s) {
  if (f.n() != part.n) {
    throw SizeMismatch("field side " + std::to_string(f.n()) +
                       " does not match partition side " + std::to_string(part.n));
  }
  const TorusField h = box_smooth(f, part.n1);
  const TorusGrid grid(part.n);
  CoarseHessianField out;
  out.per_side = part.per_side;
  for (int i = 1; i <= part.per_side; ++i) {
    for (int j = 1; j <= part.per_side; ++j) {
      const long ci = part.offset.i + static_cast<long>(i) * part.n1 + 1;
      const long cj = part.offset.j + static_cast<long>(j) * part.n1 + 1;
      std::array<double, 3> t{};
      for (int r = 0; r < 3; ++r) {
        const auto& off = kCoarseAnchorOffsets[static_cast<std::size_t>(r)];
        const double h1 = hessian_at(h, r, ci + off[0].i, cj + off[0].j);
        const double h2 = hessian_at(h, r, ci + off[1].i, cj + off[1].j);
        t[static_cast<std::size_t>(r)] = s[r] - 0.5 * (h1 + h2);
      }
      out.t.push_back(t);
      out.anchors.push_back(grid.index(ci, cj));
    }
  }
  return out;
}

std::array<double, 3> coarse_mode_multiplier(int n, int k, int l) {
  const double t = 2.0 * std::numbers::pi / static_cast<double>(n);
  const std::complex<double> wk = std::polar(1.0, t * k);
  const std::complex<double> wl = std::polar(1.0, t * l);
  const std::complex<double> wmkl = std::polar(1.0, -t * (k + l));
  const std::complex<double> one{1.0, 0.0};
  return {((wk - one) * (one - wmkl)).real(), (-(wk - one) * (wl - one)).real(),
          ((wl - one) * (one - wmkl)).real()};
}

double lp_lower_bound(int n, double eps0, double s2, double p) {
  const double base = std::sqrt(3.0) * eps0 * n / (8.0 * s2);
  return std::pow(base, 2.0 / p) * (eps0 * n * n / 2.0);
}

}  // namespace hivetorus
