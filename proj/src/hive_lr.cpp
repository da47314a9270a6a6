// SPDX-License-Identifier: MIT
#include "hivetorus/hive_lr.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <string>

#include "hivetorus/errors.hpp"

namespace hivetorus {

namespace {

long total(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

void check_partition(const std::vector<long>& v, int n, const char* name) {
  if (static_cast<int>(v.size()) != n) {
    throw InvalidArgument(std::string(name) + " must have exactly n parts");
  }
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 0) throw InvalidArgument(std::string(name) + " has a negative part");
    if (k > 0 && v[k] > v[k - 1]) {
      throw InvalidArgument(std::string(name) + " is not nonincreasing");
    }
  }
}

}  // namespace

void validate(const HiveBoundary& b) {
  if (b.n < 1) throw InvalidArgument("hive size must be positive");
  check_partition(b.lambda, b.n, "lambda");
  check_partition(b.mu, b.n, "mu");
  check_partition(b.nu, b.n, "nu");
  if (total(b.lambda) + total(b.mu) != total(b.nu)) {
    throw InvalidArgument("|lambda| + |mu| must equal |nu|");
  }
}

HiveBoundary make_boundary(std::vector<long> lambda, std::vector<long> mu,
                           std::vector<long> nu, int n) {
  const auto trim = [](std::vector<long>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  if (n == 0) {
    std::vector<long> a = lambda, c = mu, d = nu;
    trim(a);
    trim(c);
    trim(d);
    n = static_cast<int>(std::max({a.size(), c.size(), d.size(), std::size_t{1}}));
  }
  for (auto* v : {&lambda, &mu, &nu}) {
    trim(*v);
    if (static_cast<int>(v->size()) > n) {
      throw InvalidArgument("partition has more nonzero parts than the hive size");
    }
    v->resize(static_cast<std::size_t>(n), 0);
  }
  HiveBoundary b{n, std::move(lambda), std::move(mu), std::move(nu)};
  validate(b);
  return b;
}

TriangleHive::TriangleHive(int n)
    : n_(n), values_(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 2) / 2, 0) {
  if (n < 1) throw InvalidArgument("hive size must be positive");
}

std::vector<TriangleRhombus> triangle_rhombi(int n) {
  std::vector<TriangleRhombus> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      // Shared edge (i,j)-(i+1,j+1).
      if (j + 1 <= i) {
        out.push_back({{{i, j}, {i + 1, j + 1}}, {{i + 1, j}, {i, j + 1}}});
      }
      // Shared edge (i,j)-(i+1,j).
      if (j >= 1) {
        out.push_back({{{i, j}, {i + 1, j}}, {{i, j - 1}, {i + 1, j + 1}}});
      }
      // Shared edge (i+1,j)-(i+1,j+1).
      if (i + 2 <= n) {
        out.push_back({{{i + 1, j}, {i + 1, j + 1}}, {{i, j}, {i + 2, j + 1}}});
      }
    }
  }
  return out;
}

TriangleHive boundary_values(const HiveBoundary& b) {
  validate(b);
  const int n = b.n;
  TriangleHive h(n);
  long acc = 0;
  h.at(n, 0) = 0;
  for (int k = 1; k <= n; ++k) {
    acc += b.lambda[static_cast<std::size_t>(k - 1)];
    h.at(n - k, 0) = acc;
  }
  for (int k = 1; k <= n; ++k) {
    acc += b.mu[static_cast<std::size_t>(k - 1)];
    h.at(k, k) = acc;
  }
  long bottom = 0;
  for (int k = 1; k <= n; ++k) {
    bottom += b.nu[static_cast<std::size_t>(k - 1)];
    h.at(n, k) = bottom;
  }
  if (bottom != acc) throw InvalidArgument("inconsistent boundary corner");
  return h;
}

bool is_hive(const TriangleHive& h) {
  for (const TriangleRhombus& r : triangle_rhombi(h.n())) {
    const long ob = h.at(r.obtuse[0][0], r.obtuse[0][1]) + h.at(r.obtuse[1][0], r.obtuse[1][1]);
    const long ac = h.at(r.acute[0][0], r.acute[0][1]) + h.at(r.acute[1][0], r.acute[1][1]);
    if (ob < ac) return false;
  }
  return true;
}

namespace {

// One rhombus inequality seen from the node that completes it:
// sign * h(node) + (sum of the other three signed values) >= 0.
struct NodeConstraint {
  int sign;
  std::array<int, 3> other_node;  // indices into TriangleHive storage
  std::array<int, 3> other_sign;
};

struct HiveSearch {
  TriangleHive hive;
  std::vector<std::array<int, 2>> order;
  std::vector<std::vector<NodeConstraint>> constraints;  // per position in order
  std::vector<long> upper_base;                           // global upper bound per node
  std::vector<long> row_offset;                           // partial sums of nu
  std::vector<long> flat;
  std::uint64_t count = 0;

  explicit HiveSearch(const HiveBoundary& b) : hive(boundary_values(b)) {}

  long value(int flat_index) const { return flat[static_cast<std::size_t>(flat_index)]; }

  void recurse(std::size_t pos) {
    if (pos == order.size()) {
      ++count;
      return;
    }
    const auto [i, j] = order[pos];
    long lo = 0;
    long hi = flat[TriangleHive::index(i, 0)] + row_offset[static_cast<std::size_t>(j)];
    for (const NodeConstraint& c : constraints[pos]) {
      long rest = 0;
      for (int k = 0; k < 3; ++k) rest += c.other_sign[static_cast<std::size_t>(k)] * value(c.other_node[static_cast<std::size_t>(k)]);
      // sign * x + rest >= 0
      if (c.sign > 0) {
        lo = std::max(lo, -rest);
      } else {
        hi = std::min(hi, rest);
      }
    }
    const std::size_t idx = TriangleHive::index(i, j);
    for (long x = lo; x <= hi; ++x) {
      flat[idx] = x;
      recurse(pos + 1);
    }
    flat[idx] = 0;
  }
};

}  // namespace

std::uint64_t count_hives(const HiveBoundary& b) {
  validate(b);
  if (b.n > kMaxHiveSize) {
    throw InvalidArgument("hive enumeration is limited to n <= " + std::to_string(kMaxHiveSize));
  }
  HiveSearch search(b);
  const int n = b.n;
  const TriangleHive& h = search.hive;
  search.flat.assign(TriangleHive::index(n, n) + 1, 0);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= i; ++j) search.flat[TriangleHive::index(i, j)] = h.at(i, j);
  }
  search.row_offset.assign(static_cast<std::size_t>(n + 1), 0);
  for (int k = 1; k <= n; ++k) {
    search.row_offset[static_cast<std::size_t>(k)] =
        search.row_offset[static_cast<std::size_t>(k - 1)] + b.nu[static_cast<std::size_t>(k - 1)];
  }

  // Position of each node in the assignment order; boundary nodes come first.
  std::vector<int> position(search.flat.size(), -1);
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < i; ++j) {
      position[TriangleHive::index(i, j)] = static_cast<int>(search.order.size());
      search.order.push_back({i, j});
    }
  }
  search.constraints.resize(search.order.size());

  for (const TriangleRhombus& r : triangle_rhombi(n)) {
    std::array<int, 4> node{};
    std::array<int, 4> sign{};
    for (int k = 0; k < 2; ++k) {
      node[static_cast<std::size_t>(k)] = static_cast<int>(TriangleHive::index(r.obtuse[k][0], r.obtuse[k][1]));
      sign[static_cast<std::size_t>(k)] = 1;
      node[static_cast<std::size_t>(k + 2)] = static_cast<int>(TriangleHive::index(r.acute[k][0], r.acute[k][1]));
      sign[static_cast<std::size_t>(k + 2)] = -1;
    }
    int last = -1;
    std::size_t last_slot = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      const int p = position[static_cast<std::size_t>(node[k])];
      if (p > last) {
        last = p;
        last_slot = k;
      }
    }
    if (last < 0) {
      // All four vertices lie on the boundary.
      long sum = 0;
      for (std::size_t k = 0; k < 4; ++k) sum += sign[k] * search.flat[static_cast<std::size_t>(node[k])];
      if (sum < 0) return 0;
      continue;
    }
    NodeConstraint c{sign[last_slot], {}, {}};
    std::size_t m = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      if (k == last_slot) continue;
      c.other_node[m] = node[k];
      c.other_sign[m] = sign[k];
      ++m;
    }
    search.constraints[static_cast<std::size_t>(last)].push_back(c);
  }
  search.recurse(0);
  return search.count;
}

namespace {

struct TableauSearch {
  std::vector<long> lambda;
  std::vector<long> nu;
  std::vector<long> mu;
  int letters = 0;
  // Cells in reverse reading order: rows top to bottom, right to left.
  std::vector<std::array<int, 2>> cells;
  std::vector<std::vector<int>> filling;  // filling[row][col], 0 for lambda cells
  std::vector<long> used;
  std::uint64_t count = 0;

  void recurse(std::size_t pos) {
    if (pos == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[pos];
    const auto ur = static_cast<std::size_t>(r);
    const auto uc = static_cast<std::size_t>(c);
    int max_value = letters;
    if (c + 1 < nu[ur]) max_value = std::min(max_value, filling[ur][uc + 1]);
    int min_value = 1;
    if (r > 0 && c >= lambda[ur - 1] && c < nu[ur - 1]) {
      min_value = filling[ur - 1][uc] + 1;
    }
    for (int v = min_value; v <= max_value; ++v) {
      const auto uv = static_cast<std::size_t>(v);
      if (used[uv] + 1 > mu[uv - 1]) continue;
      if (v > 1 && used[uv] + 1 > used[uv - 1]) continue;
      ++used[uv];
      filling[ur][uc] = v;
      recurse(pos + 1);
      filling[ur][uc] = 0;
      --used[uv];
    }
  }
};

}  // namespace

std::uint64_t lr_tableau_oracle(const HiveBoundary& b) {
  validate(b);
  if (total(b.nu) > kMaxOracleWeight) {
    throw InvalidArgument("tableau oracle is limited to |nu| <= " +
                          std::to_string(kMaxOracleWeight));
  }
  for (int k = 0; k < b.n; ++k) {
    if (b.lambda[static_cast<std::size_t>(k)] > b.nu[static_cast<std::size_t>(k)]) return 0;
  }
  TableauSearch s;
  s.lambda = b.lambda;
  s.nu = b.nu;
  s.mu = b.mu;
  s.letters = b.n;
  s.filling.resize(static_cast<std::size_t>(b.n));
  for (int r = 0; r < b.n; ++r) {
    const auto ur = static_cast<std::size_t>(r);
    s.filling[ur].assign(static_cast<std::size_t>(b.nu[ur]), 0);
    for (long c = b.nu[ur] - 1; c >= b.lambda[ur]; --c) {
      s.cells.push_back({r, static_cast<int>(c)});
    }
  }
  s.used.assign(static_cast<std::size_t>(b.n + 1), 0);
  s.recurse(0);
  for (int v = 1; v <= b.n; ++v) {
    if (s.used[static_cast<std::size_t>(v)] != 0) throw NumericalError("oracle state leak");
  }
  return s.count;
}

std::vector<std::vector<long>> partitions(long total_weight, int parts) {
  std::vector<std::vector<long>> out;
  if (parts < 1 || total_weight < 0) return out;
  std::vector<long> cur;
  const auto rec = [&](auto&& self, long remaining, long cap) -> void {
    if (static_cast<int>(cur.size()) == parts) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (long v = std::min(remaining, cap); v >= 0; --v) {
      cur.push_back(v);
      self(self, remaining - v, v);
      cur.pop_back();
    }
  };
  rec(rec, total_weight, total_weight);
  return out;
}

}  // namespace hivetorus
