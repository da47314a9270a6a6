// SPDX-License-Identifier: MIT
#include "hivetorus/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

#include "hivetorus/errors.hpp"
#include "hivetorus/parallel.hpp"
#include "hivetorus/schema.hpp"

namespace hivetorus {

namespace {

constexpr double kTiny = 1e-14;

double row_norm(const SparseRow& row, bool mean_zero, int dim) {
  double sq = 0.0;
  double sum = 0.0;
  for (int k = 0; k < row.nnz; ++k) {
    const double c = row.coef[static_cast<std::size_t>(k)];
    sq += c * c;
    sum += c;
  }
  if (mean_zero) sq -= sum * sum / dim;
  return std::sqrt(std::max(sq, 0.0));
}

}  // namespace

double LinearBody::inner_radius() const {
  double r = std::numeric_limits<double>::infinity();
  for (const SparseRow& row : rows) {
    const double nr = row_norm(row, mean_zero, dim);
    if (nr > 0.0) r = std::min(r, row.rhs / nr);
  }
  return r;
}

bool LinearBody::contains(const std::vector<double>& x, double tol) const {
  for (const SparseRow& row : rows) {
    if (row.dot(x) > row.rhs + tol) return false;
  }
  return true;
}

LinearBody body_from_constraints(const ConstraintSystem& sys) {
  if (sys.variant != Variant::MeanZero) {
    throw InvalidArgument("hit-and-run works on the mean-zero variant");
  }
  LinearBody body;
  body.dim = sys.grid.size();
  body.mean_zero = true;
  body.rows.reserve(sys.rows.size());
  for (const ConstraintRow& r : sys.rows) {
    SparseRow s;
    s.nnz = r.nnz;
    s.idx = r.idx;
    s.coef = r.coef;
    s.rhs = r.rhs;
    body.rows.push_back(s);
  }
  const double n = sys.n();
  body.outer_radius = 2.0 * sys.bound.max() * n * n * n;
  return body;
}

LinearBody centered_cube(int m) {
  if (m < 1) throw InvalidArgument("cube dimension must be positive");
  LinearBody body;
  body.dim = m;
  body.mean_zero = false;
  for (int k = 0; k < m; ++k) {
    for (double sgn : {1.0, -1.0}) {
      SparseRow s;
      s.nnz = 1;
      s.idx[0] = k;
      s.coef[0] = sgn;
      s.rhs = 0.5;
      body.rows.push_back(s);
    }
  }
  body.outer_radius = 0.5 * std::sqrt(static_cast<double>(m));
  return body;
}

Chord chord(const LinearBody& body, const std::vector<double>& x,
            const std::vector<double>& d, double tol) {
  if (x.size() != static_cast<std::size_t>(body.dim) ||
      d.size() != static_cast<std::size_t>(body.dim)) {
    throw SizeMismatch("point or direction has the wrong dimension");
  }
  if (std::all_of(d.begin(), d.end(), [](double v) { return v == 0.0; })) {
    throw PreconditionError("degenerate direction: d is identically zero");
  }
  Chord c{-std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity(), true};
  for (const SparseRow& row : body.rows) {
    const double slack = row.rhs - row.dot(x);
    if (slack < -tol) {
      throw PreconditionError("chord start point violates a constraint by " +
                              std::to_string(-slack));
    }
    const double a = row.dot(d);
    if (a > kTiny) {
      c.t_hi = std::min(c.t_hi, std::max(slack, 0.0) / a);
    } else if (a < -kTiny) {
      c.t_lo = std::max(c.t_lo, std::max(slack, 0.0) / a);
    }
  }
  c.bounded = std::isfinite(c.t_lo) && std::isfinite(c.t_hi);
  return c;
}

Chord chord(const ConstraintSystem& sys, const TorusField& x, const TorusField& d) {
  if (x.n() != sys.n() || d.n() != sys.n()) {
    throw SizeMismatch("field sizes do not match the constraint system");
  }
  LinearBody body;
  body.dim = sys.grid.size();
  body.mean_zero = sys.variant == Variant::MeanZero;
  for (const ConstraintRow& r : sys.rows) {
    body.rows.push_back(SparseRow{r.nnz, r.idx, r.coef, r.rhs});
  }
  return chord(body, x.values(), d.values());
}

HitAndRunChain::HitAndRunChain(const LinearBody& body, std::uint64_t seed,
                               std::vector<double> start)
    : body_(body),
      rng_(seed),
      x_(std::move(start)),
      ax_(body.rows.size()),
      d_(static_cast<std::size_t>(body.dim)),
      ad_(body.rows.size()) {
  if (x_.size() != static_cast<std::size_t>(body.dim)) {
    throw SizeMismatch("start point has the wrong dimension");
  }
  resync();
  for (std::size_t r = 0; r < body_.rows.size(); ++r) {
    if (ax_[r] > body_.rows[r].rhs) {
      throw PreconditionError("hit-and-run start point is not feasible");
    }
  }
}

void HitAndRunChain::resync() {
  if (body_.mean_zero) {
    double mean = 0.0;
    for (double v : x_) mean += v;
    mean /= static_cast<double>(x_.size());
    for (double& v : x_) v -= mean;
  }
  norm2_ = 0.0;
  for (double v : x_) norm2_ += v * v;
  for (std::size_t r = 0; r < body_.rows.size(); ++r) {
    ax_[r] = body_.rows[r].dot(x_);
  }
}

void HitAndRunChain::step() {
  const std::size_t dim = d_.size();
  double norm = 0.0;
  do {
    double mean = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      d_[k] = normal_(rng_);
      mean += d_[k];
    }
    if (body_.mean_zero) {
      mean /= static_cast<double>(dim);
      for (double& v : d_) v -= mean;
    }
    norm = 0.0;
    for (double v : d_) norm += v * v;
  } while (norm == 0.0);
  const double inv = 1.0 / std::sqrt(norm);
  double xd = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    d_[k] *= inv;
    xd += x_[k] * d_[k];
  }

  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < body_.rows.size(); ++r) {
    // Unused slots carry a zero coefficient, so a fixed four-term sum is exact.
    const SparseRow& row = body_.rows[r];
    const double a = row.coef[0] * d_[static_cast<std::size_t>(row.idx[0])] +
                     row.coef[1] * d_[static_cast<std::size_t>(row.idx[1])] +
                     row.coef[2] * d_[static_cast<std::size_t>(row.idx[2])] +
                     row.coef[3] * d_[static_cast<std::size_t>(row.idx[3])];
    ad_[r] = a;
    const double slack = std::max(body_.rows[r].rhs - ax_[r], 0.0);
    // Branch-free bound update; near-zero coefficients leave both ends alone.
    const double ratio = slack / (std::abs(a) > kTiny ? a : 1.0);
    hi = a > kTiny ? std::min(hi, ratio) : hi;
    lo = a < -kTiny ? std::max(lo, ratio) : lo;
  }
  if (std::isfinite(ball_radius_)) {
    // |x + t d|^2 <= R^2 with |d| = 1.
    const double c = norm2_ - ball_radius_ * ball_radius_;
    const double disc = std::sqrt(std::max(xd * xd - c, 0.0));
    lo = std::max(lo, -xd - disc);
    hi = std::min(hi, -xd + disc);
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw NumericalError("hit-and-run met an unbounded chord");
  }
  if (hi < lo) hi = lo;
  const double t = lo + (hi - lo) * rng_.uniform01();
  for (std::size_t k = 0; k < dim; ++k) x_[k] += t * d_[k];
  for (std::size_t r = 0; r < ax_.size(); ++r) ax_[r] += t * ad_[r];
  norm2_ += 2.0 * t * xd + t * t;
  if (++steps_ % kResyncInterval == 0) resync();
}

SamplerConfig SamplerConfig::defaults(int n, std::uint64_t seed) {
  const long nn = static_cast<long>(n) * n;
  return SamplerConfig{seed, 20 * nn * nn, nn, 1};
}

SampleBatch sample_uniform(const ConstraintSystem& sys, const SamplerConfig& cfg,
                           int count) {
  if (cfg.burn_in < 0 || cfg.thinning < 1 || cfg.chains < 1) {
    throw InvalidArgument("sampler config needs burn_in >= 0, thinning >= 1, chains >= 1");
  }
  if (count < 0) throw InvalidArgument("sample count must be nonnegative");
  const LinearBody body = body_from_constraints(sys);
  if (!(body.inner_radius() > 0.0)) {
    throw PreconditionError("zero field is not interior to the polytope");
  }
  const int n = sys.n();
  const int chains = cfg.chains;
  std::vector<std::vector<std::vector<double>>> per_chain(
      static_cast<std::size_t>(chains));

  auto run_chain = [&](int c) {
    const int share = count / chains + (c < count % chains ? 1 : 0);
    HitAndRunChain chain(body, derive_seed(cfg.master_seed, static_cast<std::uint64_t>(c)),
                         std::vector<double>(static_cast<std::size_t>(body.dim), 0.0));
    chain.run(cfg.burn_in);
    auto& out = per_chain[static_cast<std::size_t>(c)];
    out.reserve(static_cast<std::size_t>(share));
    for (int k = 0; k < share; ++k) {
      chain.run(cfg.thinning);
      chain.resync();
      out.push_back(chain.point());
    }
  };

  parallel_for(chains, run_chain);

  SampleBatch batch;
  batch.n = n;
  batch.bound = sys.bound;
  batch.config = cfg;
  batch.samples.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < chains; ++c) {
    for (auto& v : per_chain[static_cast<std::size_t>(c)]) {
      batch.samples.emplace_back(n, std::move(v));
      batch.chain_of.push_back(c);
    }
  }
  return batch;
}

void write_batch_csv(const SampleBatch& batch, std::ostream& os) {
  os << "# schema " << kSamplesSchema << '\n';
  os << "# n=" << batch.n << ",s0=" << batch.bound[0] << ",s1=" << batch.bound[1]
     << ",s2=" << batch.bound[2] << ",seed=" << batch.config.master_seed
     << ",count=" << batch.samples.size() << ",burn_in=" << batch.config.burn_in
     << ",thinning=" << batch.config.thinning << ",chains=" << batch.config.chains
     << '\n';
  os << "chain";
  for (int v = 0; v < batch.n * batch.n; ++v) os << ",g" << v;
  os << '\n';
  os << std::setprecision(17);
  for (std::size_t k = 0; k < batch.samples.size(); ++k) {
    os << batch.chain_of[k];
    for (double x : batch.samples[k].values()) os << ',' << x;
    os << '\n';
  }
}

}  // namespace hivetorus
