// SPDX-License-Identifier: MIT
// Geometry of the discrete triangular torus T_n.
//
// Vertices are pairs (i, j) in (Z/nZ)^2 stored at flat index i*n + j.  The
// lattice generator 1 maps to (1, 0) and the cube root of unity w maps to
// (0, 1), so 1 + w maps to (1, 1) and w^2 = -1 - w maps to (-1, -1).
//
// A unit rhombus of class r in {0, 1, 2} is the quadruple (a, b, c, d) with
//   b - a = z,  c - b = -z w^2,  d - c = -z,  a - d = z w^2,
// where z = 1, w, w^2 for r = 0, 1, 2.  The angle at a and at c is pi/3, so
// a-c is the long diagonal and b-d the short one.  Each class is indexed by
// its anchor a.
#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace hivetorus {

struct Vertex {
  int i = 0;
  int j = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Offsets of b, c, d relative to the anchor a, per class.
inline constexpr std::array<std::array<Vertex, 3>, 3> kRhombusOffsets = {{
    {{{1, 0}, {2, 1}, {1, 1}}},        // z = 1
    {{{0, 1}, {-1, 1}, {-1, 0}}},      // z = w
    {{{-1, -1}, {-1, -2}, {0, -1}}},   // z = w^2
}};

// Signs applied to f(a), f(b), f(c), f(d) by the discrete Hessian.
inline constexpr std::array<int, 4> kRhombusSigns = {-1, 1, -1, 1};

class TorusGrid {
 public:
  explicit TorusGrid(int n);

  int n() const { return n_; }
  int size() const { return n_ * n_; }

  static int wrap(long v, int n) {
    const long r = v % n;
    return static_cast<int>(r < 0 ? r + n : r);
  }
  int index(long i, long j) const { return wrap(i, n_) * n_ + wrap(j, n_); }
  Vertex vertex(int flat) const { return {flat / n_, flat % n_}; }
  int neighbor(int flat, int di, int dj) const {
    return index(flat / n_ + di, flat % n_ + dj);
  }

 private:
  int n_;
};

// Throws InvalidArgument when n < 2.
TorusGrid build_grid(int n);

struct RhombusEdge {
  int cls = 0;
  Vertex anchor;
  std::array<int, 4> quad{};  // flat indices of a, b, c, d
};

// All n^2 rhombi of class r, ordered by flat anchor index.
std::vector<RhombusEdge> enumerate_edges(const TorusGrid& grid, int r);

// Square partition of the torus into n1 x n1 blocks together with the
// two-layer boundary set.
//
// With n2 the largest multiple of n1 not exceeding n, the square (i, j),
// 1 <= i, j <= n2/n1, is o + [(i-1)n1 + 1, i n1] x [(j-1)n1 + 1, j n1] taken
// mod n.  The boundary set is o + (b2 union (V minus [0, n2-1]^2)) where b2
// collects the points of [0, n2-1]^2 having a coordinate congruent to 0 or 1
// mod n1.  The residual set is V minus the union of the squares; it always
// lies inside the boundary set.
struct SquarePartition {
  int n = 0;
  int n1 = 0;
  int n2 = 0;
  Vertex offset;
  int per_side = 0;                        // n2 / n1
  std::vector<std::vector<int>> squares;   // index (i-1)*per_side + (j-1)
  std::vector<int> square_of;              // square index or -1, per vertex
  std::vector<char> in_boundary;           // per vertex
  std::vector<int> boundary;               // sorted flat indices
  std::vector<int> residual;               // sorted flat indices

  const std::vector<int>& square(int i, int j) const {
    return squares[static_cast<std::size_t>((i - 1) * per_side + (j - 1))];
  }
};

// Throws InvalidArgument unless 2 < n1 <= n.
SquarePartition square_partition(const TorusGrid& grid, int n1, Vertex o);

}  // namespace hivetorus
