// SPDX-License-Identifier: MIT
#include "hivetorus/polytope_model.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "hivetorus/errors.hpp"

namespace hivetorus {

double HessianBound::min() const { return std::min({s_[0], s_[1], s_[2]}); }
double HessianBound::max() const { return std::max({s_[0], s_[1], s_[2]}); }

double ConstraintSystem::equality_residual(const TorusField& g) const {
  return variant == Variant::MeanZero ? g.mean() : g[0];
}

ConstraintSystem build_constraints(int n, const HessianBound& s, Variant variant) {
  if (!s.positive()) {
    throw InvalidArgument("Hessian bound components must be positive");
  }
  ConstraintSystem sys{build_grid(n), s, variant, {}};
  sys.rows.reserve(static_cast<std::size_t>(3 * sys.grid.size()));
  for (int r = 0; r < 3; ++r) {
    for (const RhombusEdge& e : enumerate_edges(sys.grid, r)) {
      ConstraintRow row;
      row.cls = r;
      row.anchor = e.quad[0];
      row.rhs = s[r];
      for (int k = 0; k < 4; ++k) {
        const int v = e.quad[static_cast<std::size_t>(k)];
        const double c = kRhombusSigns[static_cast<std::size_t>(k)];
        int slot = -1;
        for (int t = 0; t < row.nnz; ++t) {
          if (row.idx[static_cast<std::size_t>(t)] == v) slot = t;
        }
        if (slot < 0) {
          slot = row.nnz++;
          row.idx[static_cast<std::size_t>(slot)] = v;
          row.coef[static_cast<std::size_t>(slot)] = 0.0;
        }
        row.coef[static_cast<std::size_t>(slot)] += c;
      }
      // Drop entries that cancelled.
      int w = 0;
      for (int t = 0; t < row.nnz; ++t) {
        if (row.coef[static_cast<std::size_t>(t)] != 0.0) {
          row.idx[static_cast<std::size_t>(w)] = row.idx[static_cast<std::size_t>(t)];
          row.coef[static_cast<std::size_t>(w)] = row.coef[static_cast<std::size_t>(t)];
          ++w;
        }
      }
      row.nnz = w;
      for (int t = w; t < 4; ++t) {
        row.idx[static_cast<std::size_t>(t)] = 0;
        row.coef[static_cast<std::size_t>(t)] = 0.0;
      }
      sys.rows.push_back(row);
    }
  }
  return sys;
}

Membership membership(const ConstraintSystem& sys, const TorusField& f, double tol) {
  if (f.n() != sys.n()) {
    throw SizeMismatch("field side " + std::to_string(f.n()) +
                       " does not match system side " + std::to_string(sys.n()));
  }
  double worst = std::abs(sys.equality_residual(f));
  for (const ConstraintRow& row : sys.rows) {
    worst = std::max(worst, row.evaluate(f.values()) - row.rhs);
  }
  Membership m;
  m.max_violation = std::max(0.0, worst);
  m.inside = worst <= tol;
  return m;
}

void write_lp(const ConstraintSystem& sys, std::ostream& os) {
  os << "# n " << sys.n() << " s " << sys.bound[0] << ' ' << sys.bound[1] << ' '
     << sys.bound[2] << " rows " << sys.rows.size() << '\n';
  for (const ConstraintRow& row : sys.rows) {
    os << "r" << row.cls << '_' << row.anchor << ':';
    for (int k = 0; k < row.nnz; ++k) {
      const double c = row.coef[static_cast<std::size_t>(k)];
      os << ' ' << (c >= 0 ? "+" : "-") << std::abs(c) << " x"
         << row.idx[static_cast<std::size_t>(k)];
    }
    os << " <= " << row.rhs << '\n';
  }
  if (sys.variant == Variant::MeanZero) {
    os << "eq:";
    for (int v = 0; v < sys.grid.size(); ++v) os << " +1 x" << v;
    os << " = 0\n";
  } else {
    os << "eq: +1 x0 = 0\n";
  }
}

namespace {

// Class-r stencil applied to a function of two integer variables.
template <class F>
double stencil(const F& f, int r, double x, double y) {
  const auto& off = kRhombusOffsets[static_cast<std::size_t>(r)];
  return -f(x, y) + f(x + off[0].i, y + off[0].j) - f(x + off[1].i, y + off[1].j) +
         f(x + off[2].i, y + off[2].j);
}

double det3(const std::array<std::array<double, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

QuadraticReference quadratic_reference(const HessianBound& s, int n) {
  if (n < 2) throw InvalidArgument("quadratic reference needs n >= 2");
  // The stencil of each monomial is constant, so the three class equations
  // form a 3x3 system in (alpha, beta, gamma).
  std::array<std::array<double, 3>, 3> m{};
  const auto xx = [](double x, double) { return x * x; };
  const auto xy = [](double x, double y) { return x * y; };
  const auto yy = [](double, double y) { return y * y; };
  for (int r = 0; r < 3; ++r) {
    m[static_cast<std::size_t>(r)] = {stencil(xx, r, 0, 0), stencil(xy, r, 0, 0),
                                      stencil(yy, r, 0, 0)};
  }
  const double d = det3(m);
  if (std::abs(d) < 1e-12) {
    throw NumericalError("quadratic reference system is singular");
  }
  std::array<double, 3> sol{};
  for (int c = 0; c < 3; ++c) {
    auto mc = m;
    for (int r = 0; r < 3; ++r) {
      mc[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = -s[r];
    }
    sol[static_cast<std::size_t>(c)] = det3(mc) / d;
  }
  QuadraticReference q;
  q.alpha = sol[0];
  q.beta = sol[1];
  q.gamma = sol[2];
  q.n = n;
  // Q(n,0) = 0 and Q(0,n) = 0 fix the linear part.
  q.a = -q.alpha * n;
  q.b = -q.gamma * n;
  return q;
}

TorusField diameter_witness(int n, const HessianBound& s) {
  const QuadraticReference q = quadratic_reference(s, n);
  const double nn = n;
  const double q00 = q(0, 0);
  const double qn0 = q(nn, 0);
  const double q0n = q(0, nn);
  const double qnn = q(nn, nn);
  TorusField w(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double x = i / nn;
      const double y = j / nn;
      double r;
      if (j <= i) {
        // Triangle (0,0), (n,0), (n,n).
        r = (1.0 - x) * q00 + (x - y) * qn0 + y * qnn;
      } else {
        // Triangle (0,0), (n,n), (0,n).
        r = (1.0 - y) * q00 + x * qnn + (y - x) * q0n;
      }
      w.at(i, j) = r - q(i, j);
    }
  }
  const double kappa = -w.mean();
  for (double& v : w.values()) v += kappa;
  return w;
}

double diameter_lower_bound(int n, const HessianBound& s) {
  const double h = static_cast<double>(n / 2);  // floor(n / 2)
  return (s[1] + s[2]) * h * h / 4.0;
}

bool cone_predicate(const WeightTriple& w) {
  const double lhs = w[0] * w[0] + w[1] * w[1] + w[2] * w[2];
  const double rhs = 2.0 * (w[0] * w[1] + w[1] * w[2] + w[2] * w[0]);
  return lhs < rhs;
}

}  // namespace hivetorus
