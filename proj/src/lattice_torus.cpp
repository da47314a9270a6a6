// SPDX-License-Identifier: MIT
#include "hivetorus/lattice_torus.hpp"

#include <algorithm>
#include <string>

#include "hivetorus/errors.hpp"

namespace hivetorus {

TorusGrid::TorusGrid(int n) : n_(n) {
  if (n < 2) {
    throw InvalidArgument("torus side length must be at least 2, got " +
                          std::to_string(n));
  }
}

TorusGrid build_grid(int n) { return TorusGrid(n); }

std::vector<RhombusEdge> enumerate_edges(const TorusGrid& grid, int r) {
  if (r < 0 || r > 2) {
    throw InvalidArgument("edge class must be 0, 1 or 2");
  }
  const int n = grid.n();
  std::vector<RhombusEdge> edges;
  edges.reserve(static_cast<std::size_t>(grid.size()));
  const auto& off = kRhombusOffsets[static_cast<std::size_t>(r)];
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      RhombusEdge e;
      e.cls = r;
      e.anchor = {i, j};
      e.quad[0] = grid.index(i, j);
      for (int k = 0; k < 3; ++k) {
        e.quad[static_cast<std::size_t>(k + 1)] =
            grid.index(i + off[static_cast<std::size_t>(k)].i,
                       j + off[static_cast<std::size_t>(k)].j);
      }
      edges.push_back(e);
    }
  }
  return edges;
}

SquarePartition square_partition(const TorusGrid& grid, int n1, Vertex o) {
  const int n = grid.n();
  if (n1 <= 2 || n1 > n) {
    throw InvalidArgument("square side n1 must satisfy 2 < n1 <= n (n1 = " +
                          std::to_string(n1) + ", n = " + std::to_string(n) +
                          ")");
  }
  SquarePartition p;
  p.n = n;
  p.n1 = n1;
  p.n2 = (n / n1) * n1;
  p.offset = {TorusGrid::wrap(o.i, n), TorusGrid::wrap(o.j, n)};
  p.per_side = p.n2 / n1;
  p.square_of.assign(static_cast<std::size_t>(grid.size()), -1);
  p.in_boundary.assign(static_cast<std::size_t>(grid.size()), 0);

  for (int si = 1; si <= p.per_side; ++si) {
    for (int sj = 1; sj <= p.per_side; ++sj) {
      std::vector<int> cells;
      cells.reserve(static_cast<std::size_t>(n1 * n1));
      for (int x = (si - 1) * n1 + 1; x <= si * n1; ++x) {
        for (int y = (sj - 1) * n1 + 1; y <= sj * n1; ++y) {
          const int v = grid.index(p.offset.i + x, p.offset.j + y);
          cells.push_back(v);
          p.square_of[static_cast<std::size_t>(v)] =
              static_cast<int>(p.squares.size());
        }
      }
      p.squares.push_back(std::move(cells));
    }
  }

  // Boundary set before translation, then shifted by o.
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      bool in_b;
      if (x < p.n2 && y < p.n2) {
        const int rx = x % n1;
        const int ry = y % n1;
        in_b = rx <= 1 || ry <= 1;
      } else {
        in_b = true;
      }
      if (in_b) {
        p.in_boundary[static_cast<std::size_t>(
            grid.index(p.offset.i + x, p.offset.j + y))] = 1;
      }
    }
  }
  for (int v = 0; v < grid.size(); ++v) {
    if (p.in_boundary[static_cast<std::size_t>(v)]) p.boundary.push_back(v);
    if (p.square_of[static_cast<std::size_t>(v)] < 0) p.residual.push_back(v);
  }
  return p;
}

}  // namespace hivetorus
