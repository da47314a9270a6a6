// SPDX-License-Identifier: MIT
#include "hivetorus/volume_estimator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "hivetorus/errors.hpp"
#include "hivetorus/parallel.hpp"

namespace hivetorus {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double length(const Vec3& a) { return std::sqrt(dot(a, a)); }

double det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

// Orthonormal basis of {x in R^dim : sum x = 0} by Gram-Schmidt.
std::vector<std::vector<double>> mean_zero_basis(int dim) {
  std::vector<std::vector<double>> basis;
  for (int v = 0; v + 1 < dim; ++v) {
    std::vector<double> e(static_cast<std::size_t>(dim), -1.0 / dim);
    e[static_cast<std::size_t>(v)] += 1.0;
    for (const auto& b : basis) {
      const double c = std::inner_product(e.begin(), e.end(), b.begin(), 0.0);
      for (int k = 0; k < dim; ++k) e[static_cast<std::size_t>(k)] -= c * b[static_cast<std::size_t>(k)];
    }
    const double nr = std::sqrt(std::inner_product(e.begin(), e.end(), e.begin(), 0.0));
    for (double& x : e) x /= nr;
    basis.push_back(std::move(e));
  }
  return basis;
}

struct Plane {
  Vec3 normal;  // unit
  double offset;  // normal . x <= offset
};

// Fraction-in-ball style estimate with batch-means variance.
struct RatioStats {
  double p = 0.0;
  double var = 0.0;
};

RatioStats batch_stats(const std::vector<char>& hits, int batches) {
  RatioStats st;
  const std::size_t total = hits.size();
  if (total == 0) return st;
  double sum = 0.0;
  for (char h : hits) sum += h;
  st.p = sum / static_cast<double>(total);
  const int b = std::max(2, std::min<int>(batches, static_cast<int>(total)));
  std::vector<double> means(static_cast<std::size_t>(b), 0.0);
  std::vector<double> counts(static_cast<std::size_t>(b), 0.0);
  for (std::size_t k = 0; k < total; ++k) {
    const std::size_t slot = k * static_cast<std::size_t>(b) / total;
    means[slot] += hits[k];
    counts[slot] += 1.0;
  }
  double mbar = 0.0;
  for (int k = 0; k < b; ++k) {
    means[static_cast<std::size_t>(k)] /= counts[static_cast<std::size_t>(k)];
    mbar += means[static_cast<std::size_t>(k)];
  }
  mbar /= b;
  double ss = 0.0;
  for (double m : means) ss += (m - mbar) * (m - mbar);
  st.var = ss / (b - 1) / b;
  // A run with no observed variation still carries binomial uncertainty of
  // at least one count.
  const double floor = 1.0 / (static_cast<double>(total) * static_cast<double>(total));
  st.var = std::max(st.var, floor);
  return st;
}

long effective_thinning(const McConfig& cfg, int m) {
  return cfg.thinning > 0 ? cfg.thinning : std::max(1, m);
}

long effective_burn_in(const McConfig& cfg, int m) {
  return cfg.burn_in_per_level > 0 ? cfg.burn_in_per_level : 10 * effective_thinning(cfg, m);
}

void validate(const McConfig& cfg) {
  if (cfg.samples_per_level < 1 || cfg.batches < 2 || cfg.chains < 1 ||
      cfg.thinning < 0 || cfg.burn_in_per_level < 0) {
    throw InvalidArgument("invalid Monte Carlo configuration");
  }
}

}  // namespace

std::string to_string(VolumeMethod m) {
  return m == VolumeMethod::Exact3d ? "exact3d" : "mc";
}

double VolumeEstimate::per_vertex_scale() const {
  return std::pow(value, 1.0 / static_cast<double>(dimension));
}

double unit_ball_volume(int m) {
  const double half = 0.5 * m;
  return std::exp(half * std::log(std::numbers::pi) - std::lgamma(half + 1.0));
}

VolumeEstimate exact_volume_3d(const ConstraintSystem& sys) {
  if (sys.n() != 2 || sys.variant != Variant::MeanZero) {
    throw InvalidArgument("exact volume is available for n = 2, mean-zero variant only");
  }
  const int dim = sys.grid.size();
  const auto basis = mean_zero_basis(dim);

  // Rows in basis coordinates, normalized and deduplicated.
  std::vector<Plane> planes;
  for (const ConstraintRow& row : sys.rows) {
    Vec3 a{0.0, 0.0, 0.0};
    for (int c = 0; c < 3; ++c) {
      for (int k = 0; k < row.nnz; ++k) {
        a[static_cast<std::size_t>(c)] +=
            row.coef[static_cast<std::size_t>(k)] *
            basis[static_cast<std::size_t>(c)][static_cast<std::size_t>(row.idx[static_cast<std::size_t>(k)])];
      }
    }
    const double len = length(a);
    if (len < 1e-12) continue;
    Plane pl{{a[0] / len, a[1] / len, a[2] / len}, row.rhs / len};
    const bool dup = std::any_of(planes.begin(), planes.end(), [&](const Plane& q) {
      return length(sub(q.normal, pl.normal)) < 1e-12 && std::abs(q.offset - pl.offset) < 1e-12;
    });
    if (!dup) planes.push_back(pl);
  }

  // Vertices: feasible intersections of plane triples.
  std::vector<Vec3> verts;
  const std::size_t np = planes.size();
  for (std::size_t a = 0; a < np; ++a) {
    for (std::size_t b = a + 1; b < np; ++b) {
      for (std::size_t c = b + 1; c < np; ++c) {
        const Vec3& na = planes[a].normal;
        const Vec3& nb = planes[b].normal;
        const Vec3& nc = planes[c].normal;
        const double d = det3(na, nb, nc);
        if (std::abs(d) < 1e-12) continue;
        // Cramer's rule via cross products.
        const Vec3 bc = cross(nb, nc);
        const Vec3 ca = cross(nc, na);
        const Vec3 ab = cross(na, nb);
        Vec3 x{};
        for (int k = 0; k < 3; ++k) {
          x[static_cast<std::size_t>(k)] =
              (planes[a].offset * bc[static_cast<std::size_t>(k)] +
               planes[b].offset * ca[static_cast<std::size_t>(k)] +
               planes[c].offset * ab[static_cast<std::size_t>(k)]) / d;
        }
        const bool feasible = std::all_of(planes.begin(), planes.end(), [&](const Plane& p) {
          return dot(p.normal, x) <= p.offset + 1e-9 * (1.0 + std::abs(p.offset));
        });
        if (!feasible) continue;
        const bool seen = std::any_of(verts.begin(), verts.end(), [&](const Vec3& v) {
          return length(sub(v, x)) < 1e-9 * (1.0 + length(x));
        });
        if (!seen) verts.push_back(x);
      }
    }
  }
  if (verts.size() < 4) throw NumericalError("polytope has fewer than four vertices");

  // Sum of cones from the origin over each facet polygon.
  double vol = 0.0;
  for (const Plane& p : planes) {
    std::vector<Vec3> face;
    for (const Vec3& v : verts) {
      if (std::abs(dot(p.normal, v) - p.offset) <= 1e-9 * (1.0 + std::abs(p.offset))) {
        face.push_back(v);
      }
    }
    if (face.size() < 3) continue;
    Vec3 c{0.0, 0.0, 0.0};
    for (const Vec3& v : face) {
      for (int k = 0; k < 3; ++k) c[static_cast<std::size_t>(k)] += v[static_cast<std::size_t>(k)];
    }
    for (double& x : c) x /= static_cast<double>(face.size());
    Vec3 e1 = sub(face[0], c);
    const double l1 = length(e1);
    for (double& x : e1) x /= l1;
    const Vec3 e2 = cross(p.normal, e1);
    std::sort(face.begin(), face.end(), [&](const Vec3& u, const Vec3& v) {
      const Vec3 du = sub(u, c);
      const Vec3 dv = sub(v, c);
      return std::atan2(dot(du, e2), dot(du, e1)) < std::atan2(dot(dv, e2), dot(dv, e1));
    });
    double area = 0.0;
    for (std::size_t k = 0; k < face.size(); ++k) {
      const Vec3 u = sub(face[k], c);
      const Vec3 v = sub(face[(k + 1) % face.size()], c);
      area += 0.5 * dot(cross(u, v), p.normal);
    }
    vol += p.offset * area / 3.0;
  }
  VolumeEstimate est;
  est.value = vol;
  est.method = VolumeMethod::Exact3d;
  est.dimension = 3;
  return est;
}

VolumeEstimate mc_volume(const LinearBody& body, const McConfig& cfg) {
  validate(cfg);
  const int m = body.intrinsic_dimension();
  const double r0 = body.inner_radius();
  const double big = body.outer_radius;
  if (!(r0 > 0.0) || !std::isfinite(r0)) {
    throw PreconditionError("origin is not an interior point of the body");
  }
  if (!std::isfinite(big)) throw InvalidArgument("body needs a finite outer radius");
  const double dm = m;
  const int levels = std::max(0, static_cast<int>(std::ceil(dm * std::log2(big / r0))));
  const long thin = effective_thinning(cfg, m);
  const long burn = effective_burn_in(cfg, m);
  const int chains = cfg.chains;

  std::vector<HitAndRunChain> walkers;
  walkers.reserve(static_cast<std::size_t>(chains));
  for (int c = 0; c < chains; ++c) {
    walkers.emplace_back(body, derive_seed(cfg.seed, static_cast<std::uint64_t>(c)),
                         std::vector<double>(static_cast<std::size_t>(body.dim), 0.0));
  }

  double log_vol = std::log(unit_ball_volume(m)) + dm * std::log(r0);
  double rel_var = 0.0;
  long counted = 0;
  std::vector<std::vector<char>> hits(static_cast<std::size_t>(chains));
  for (int i = 1; i <= levels; ++i) {
    const double r_prev = r0 * std::exp2((i - 1) / dm);
    const double r_cur = (i == levels) ? std::max(big, r0 * std::exp2(i / dm))
                                       : r0 * std::exp2(i / dm);
    const double inner2 = r_prev * r_prev;
    parallel_for(chains, [&](int c) {
      HitAndRunChain& w = walkers[static_cast<std::size_t>(c)];
      w.set_ball_radius(r_cur);
      w.run(burn);
      const long share = cfg.samples_per_level / chains +
                         (c < cfg.samples_per_level % chains ? 1 : 0);
      auto& h = hits[static_cast<std::size_t>(c)];
      h.assign(static_cast<std::size_t>(share), 0);
      for (long k = 0; k < share; ++k) {
        w.run(thin);
        h[static_cast<std::size_t>(k)] = w.norm_squared() <= inner2 ? 1 : 0;
      }
    });
    std::vector<char> all;
    for (const auto& h : hits) all.insert(all.end(), h.begin(), h.end());
    const RatioStats st = batch_stats(all, cfg.batches);
    if (st.p <= 0.0) throw NumericalError("annealing level produced no hits");
    log_vol -= std::log(st.p);
    rel_var += st.var / (st.p * st.p);
    counted += static_cast<long>(all.size());
  }
  VolumeEstimate est;
  est.value = std::exp(log_vol);
  est.std_error = est.value * std::sqrt(rel_var);
  est.method = VolumeMethod::MonteCarlo;
  est.samples = counted;
  est.levels = levels;
  est.dimension = m;
  return est;
}

VolumeEstimate mc_volume(const ConstraintSystem& sys, const McConfig& cfg) {
  return mc_volume(body_from_constraints(sys), cfg);
}

VolumeEstimate volume(int n, const HessianBound& s, const McConfig& cfg) {
  const ConstraintSystem sys = build_constraints(n, s, Variant::MeanZero);
  return n == 2 ? exact_volume_3d(sys) : mc_volume(sys, cfg);
}

std::pair<double, double> nested_ratio(int n, const HessianBound& s_big,
                                       const HessianBound& s_small,
                                       const McConfig& cfg) {
  validate(cfg);
  for (int r = 0; r < 3; ++r) {
    if (s_small[r] > s_big[r]) throw InvalidArgument("nested ratio needs s_small <= s_big");
  }
  const ConstraintSystem big = build_constraints(n, s_big, Variant::MeanZero);
  const LinearBody body = body_from_constraints(big);
  const int m = body.intrinsic_dimension();
  const long thin = effective_thinning(cfg, m);
  const long burn = 20 * effective_burn_in(cfg, m);
  const int chains = cfg.chains;
  std::vector<std::vector<char>> hits(static_cast<std::size_t>(chains));
  parallel_for(chains, [&](int c) {
    HitAndRunChain w(body, derive_seed(cfg.seed, static_cast<std::uint64_t>(c)),
                     std::vector<double>(static_cast<std::size_t>(body.dim), 0.0));
    w.run(burn);
    const long share = cfg.samples_per_level / chains +
                       (c < cfg.samples_per_level % chains ? 1 : 0);
    auto& h = hits[static_cast<std::size_t>(c)];
    h.assign(static_cast<std::size_t>(share), 0);
    for (long k = 0; k < share; ++k) {
      w.run(thin);
      bool inside = true;
      for (const ConstraintRow& row : big.rows) {
        if (row.evaluate(w.point()) > s_small[row.cls]) {
          inside = false;
          break;
        }
      }
      h[static_cast<std::size_t>(k)] = inside ? 1 : 0;
    }
  });
  std::vector<char> all;
  for (const auto& h : hits) all.insert(all.end(), h.begin(), h.end());
  const RatioStats st = batch_stats(all, cfg.batches);
  return {st.p, std::sqrt(st.var)};
}

double default_fd_step(int n, const HessianBound& s) {
  return (n == 2 ? 1e-3 : 0.05) * s.min();
}

FacetWeights facet_weights(int n, const HessianBound& s, double h, const McConfig& cfg) {
  if (!s.positive()) throw InvalidArgument("Hessian bound components must be positive");
  if (!(h > 0.0) || h >= s.min()) throw InvalidArgument("step h must lie in (0, min s)");
  FacetWeights fw;
  fw.n = n;
  fw.s = s;
  fw.h = h;
  const double nn = static_cast<double>(n) * n;
  fw.volume = volume(n, s, cfg);
  const double vol = fw.volume.value;
  for (int r = 0; r < 3; ++r) {
    std::array<double, 3> up = s.values();
    std::array<double, 3> dn = s.values();
    up[static_cast<std::size_t>(r)] += h;
    dn[static_cast<std::size_t>(r)] -= h;
    const HessianBound su(up);
    const HessianBound sd(dn);
    double ratio_diff;
    double ratio_se = 0.0;
    if (n == 2) {
      const double vu = exact_volume_3d(build_constraints(n, su)).value;
      const double vd = exact_volume_3d(build_constraints(n, sd)).value;
      ratio_diff = (vu - vd) / vol;
    } else {
      // |P(s+h)|/|P(s)| = 1 / (fraction of P(s+h) inside P(s)) and
      // |P(s-h)|/|P(s)| = fraction of P(s) inside P(s-h).
      const auto [p_up, se_up] = nested_ratio(n, su, s, cfg);
      const auto [p_dn, se_dn] = nested_ratio(n, s, sd, cfg);
      if (p_up <= 0.0) throw NumericalError("nested ratio estimate is zero");
      const double rho_up = 1.0 / p_up;
      const double se_rho_up = se_up / (p_up * p_up);
      ratio_diff = rho_up - p_dn;
      ratio_se = std::sqrt(se_rho_up * se_rho_up + se_dn * se_dn);
    }
    const double what = ratio_diff / (2.0 * h * nn);
    const double what_se = ratio_se / (2.0 * h * nn);
    fw.normalized[static_cast<std::size_t>(r)] = what;
    fw.w[static_cast<std::size_t>(r)] = what * vol;
    fw.std_error[static_cast<std::size_t>(r)] =
        std::hypot(vol * what_se, what * fw.volume.std_error);
  }
  double euler = 0.0;
  for (int r = 0; r < 3; ++r) euler += s[r] * fw.normalized[static_cast<std::size_t>(r)];
  fw.euler_residual = euler - (nn - 1.0) / nn;
  return fw;
}

DetBoundReport det_bound_report(const FacetWeights& weights) {
  DetBoundReport rep;
  rep.weights = weights;
  const int n = weights.n;
  const double m = static_cast<double>(n) * n - 1.0;
  const DeltaSpectrum sp = delta_w_spectrum(n, weights.normalized);
  rep.product = std::exp(sp.log_pseudo_determinant / m + std::log(weights.volume.value) / m);
  rep.bound_ok = std::isfinite(rep.product) && rep.product <= 2.0 * std::numbers::e;
  return rep;
}

DetBoundReport det_bound_report(int n, const HessianBound& s, const McConfig& cfg) {
  return det_bound_report(facet_weights(n, s, default_fd_step(n, s), cfg));
}

}  // namespace hivetorus
