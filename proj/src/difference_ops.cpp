// SPDX-License-Identifier: MIT
#include "hivetorus/difference_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hivetorus/errors.hpp"

namespace hivetorus {

TorusField::TorusField(int n, double fill)
    : n_(n), values_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {
  if (n < 2) throw InvalidArgument("field side length must be at least 2");
}

TorusField::TorusField(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n < 2) throw InvalidArgument("field side length must be at least 2");
  if (values_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw SizeMismatch("field has " + std::to_string(values_.size()) +
                       " values, expected " + std::to_string(n * n));
  }
}

double TorusField::sum() const {
  double s = 0.0;
  for (double x : values_) s += x;
  return s;
}

double TorusField::mean() const { return sum() / static_cast<double>(size()); }

double TorusField::max_abs() const {
  double m = 0.0;
  for (double x : values_) m = std::max(m, std::abs(x));
  return m;
}

TorusField& TorusField::operator+=(const TorusField& o) {
  if (o.n_ != n_) throw SizeMismatch("field sizes differ");
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
  return *this;
}

TorusField& TorusField::operator-=(const TorusField& o) {
  if (o.n_ != n_) throw SizeMismatch("field sizes differ");
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= o.values_[k];
  return *this;
}

TorusField& TorusField::operator*=(double a) {
  for (double& x : values_) x *= a;
  return *this;
}

TorusField operator+(TorusField a, const TorusField& b) { return a += b; }
TorusField operator-(TorusField a, const TorusField& b) { return a -= b; }
TorusField operator*(double s, TorusField a) { return a *= s; }

double HessianField::max_entry() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& c : cls) {
    for (double x : c) m = std::max(m, x);
  }
  return m;
}

double HessianField::max_abs() const {
  double m = 0.0;
  for (const auto& c : cls) {
    for (double x : c) m = std::max(m, std::abs(x));
  }
  return m;
}

double hessian_at(const TorusField& f, int r, long i, long j) {
  const auto& off = kRhombusOffsets[static_cast<std::size_t>(r)];
  return -f.at(i, j) + f.at(i + off[0].i, j + off[0].j) -
         f.at(i + off[1].i, j + off[1].j) + f.at(i + off[2].i, j + off[2].j);
}

HessianField hessian_field(const TorusField& f, const TorusGrid& grid) {
  if (f.n() != grid.n()) {
    throw SizeMismatch("field side " + std::to_string(f.n()) +
                       " does not match grid side " + std::to_string(grid.n()));
  }
  const int n = grid.n();
  HessianField h;
  h.n = n;
  for (int r = 0; r < 3; ++r) {
    auto& out = h.cls[static_cast<std::size_t>(r)];
    out.resize(static_cast<std::size_t>(grid.size()));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        out[static_cast<std::size_t>(i * n + j)] = hessian_at(f, r, i, j);
      }
    }
  }
  return h;
}

TorusField first_difference(const TorusField& f, int r) {
  if (r < 0 || r > 2) throw InvalidArgument("direction must be 0, 1 or 2");
  const int n = f.n();
  const Vertex d = kFirstDiffDir[static_cast<std::size_t>(r)];
  TorusField out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.at(i, j) = f.at(i + d.i, j + d.j) - f.at(i, j);
    }
  }
  return out;
}

TorusField oriented_second_difference(const TorusField& f, int r) {
  if (r < 0 || r > 2) throw InvalidArgument("edge class must be 0, 1 or 2");
  const int n = f.n();
  const Vertex s = kFactorShift[static_cast<std::size_t>(r)];
  TorusField out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.at(i, j) = -hessian_at(f, r, i + s.i, j + s.j);
    }
  }
  return out;
}

TorusField delta_w_apply(const TorusField& f, const WeightTriple& w) {
  const int n = f.n();
  const double cj = -w[0] + w[1] + w[2];   // along (0,1)
  const double cd = w[0] - w[1] + w[2];    // along (1,1)
  const double ci = w[0] + w[1] - w[2];    // along (1,0)
  TorusField out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double y = f.at(i, j);
      const double lj = f.at(i, j + 1) - 2.0 * y + f.at(i, j - 1);
      const double ld = f.at(i + 1, j + 1) - 2.0 * y + f.at(i - 1, j - 1);
      const double li = f.at(i + 1, j) - 2.0 * y + f.at(i - 1, j);
      out.at(i, j) = 0.5 * (cj * lj + cd * ld + ci * li);
    }
  }
  return out;
}

double delta_w_eigenvalue(int n, const WeightTriple& w, int k, int l) {
  const double t = 2.0 * std::numbers::pi / static_cast<double>(n);
  const double el = 2.0 * std::cos(t * l) - 2.0;
  const double ekl = 2.0 * std::cos(t * (k + l)) - 2.0;
  const double ek = 2.0 * std::cos(t * k) - 2.0;
  return 0.5 * ((-w[0] + w[1] + w[2]) * el + (w[0] - w[1] + w[2]) * ekl +
                (w[0] + w[1] - w[2]) * ek);
}

DeltaSpectrum delta_w_spectrum(int n, const WeightTriple& w) {
  if (n < 2) throw InvalidArgument("spectrum needs n >= 2");
  DeltaSpectrum sp;
  sp.n = n;
  sp.eigenvalues.resize(static_cast<std::size_t>(n * n));
  double prod = 1.0;
  double logsum = 0.0;
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      const double ev = (k == 0 && l == 0) ? 0.0 : delta_w_eigenvalue(n, w, k, l);
      sp.eigenvalues[static_cast<std::size_t>(k * n + l)] = ev;
      if (k == 0 && l == 0) continue;
      prod *= ev;
      logsum += std::log(std::abs(ev));
    }
  }
  sp.pseudo_determinant = std::abs(prod);
  sp.log_pseudo_determinant = logsum;
  return sp;
}

TorusField character_re(int n, int k, int l) {
  TorusField f(n);
  const double t = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      f.at(i, j) = std::cos(t * static_cast<double>((static_cast<long>(k) * i +
                                                     static_cast<long>(l) * j) % n));
    }
  }
  return f;
}

TorusField character_im(int n, int k, int l) {
  TorusField f(n);
  const double t = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      f.at(i, j) = std::sin(t * static_cast<double>((static_cast<long>(k) * i +
                                                     static_cast<long>(l) * j) % n));
    }
  }
  return f;
}

}  // namespace hivetorus
