// SPDX-License-Identifier: MIT
// Integer hives on the size-n triangle and Littlewood-Richardson counts.
//
// Nodes are (i, j) with 0 <= j <= i <= n; row i runs left to right.  The
// boundary is filled with partial sums:
//   h(n - k, 0) = l_1 + ... + l_k                  (left side, bottom to top)
//   h(k, k)     = |l| + m_1 + ... + m_k            (right side, top to bottom)
//   h(n, k)     = v_1 + ... + v_k                  (bottom side)
// Every unit rhombus satisfies obtuse sum >= acute sum, which is concavity
// of the piecewise linear extension.  The number of integer fillings of the
// interior is the Littlewood-Richardson coefficient c^v_{l m}.
#pragma once

#include <cstdint>
#include <vector>

namespace hivetorus {

struct HiveBoundary {
  int n = 0;
  std::vector<long> lambda;
  std::vector<long> mu;
  std::vector<long> nu;
};

// Throws InvalidArgument when a vector has the wrong length, is not
// nonincreasing and nonnegative, or when |lambda| + |mu| != |nu|.
void validate(const HiveBoundary& b);

// Builds a boundary from partitions of any length, padding with zeros to n
// parts; n = 0 picks the longest of the three.
HiveBoundary make_boundary(std::vector<long> lambda, std::vector<long> mu,
                           std::vector<long> nu, int n = 0);

// Values on a triangle, stored row by row: node (i, j) at i (i + 1) / 2 + j.
class TriangleHive {
 public:
  explicit TriangleHive(int n);
  int n() const noexcept { return n_; }
  static std::size_t index(int i, int j) {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(i + 1) / 2 +
           static_cast<std::size_t>(j);
  }
  long& at(int i, int j) { return values_[index(i, j)]; }
  long at(int i, int j) const { return values_[index(i, j)]; }
  bool is_boundary(int i, int j) const { return j == 0 || j == i || i == n_; }

 private:
  int n_;
  std::vector<long> values_;
};

// Unit rhombus with its obtuse and acute vertex pairs.
struct TriangleRhombus {
  int obtuse[2][2];
  int acute[2][2];
};

std::vector<TriangleRhombus> triangle_rhombi(int n);

// Boundary fill; interior entries are left at zero.
TriangleHive boundary_values(const HiveBoundary& b);

// True when every unit rhombus inequality holds.
bool is_hive(const TriangleHive& h);

inline constexpr int kMaxHiveSize = 6;
inline constexpr long kMaxOracleWeight = 12;

// Exhaustive count of integer hives; throws InvalidArgument when n exceeds
// kMaxHiveSize.
std::uint64_t count_hives(const HiveBoundary& b);

// Independent count of LR skew tableaux of shape nu / lambda and content mu
// whose reverse reading word is a lattice word.  Throws InvalidArgument when
// |nu| exceeds kMaxOracleWeight.
std::uint64_t lr_tableau_oracle(const HiveBoundary& b);

// Every partition of `total` into at most `parts` parts, as length-`parts`
// vectors in reverse lexicographic order.
std::vector<std::vector<long>> partitions(long total, int parts);

}  // namespace hivetorus
