// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <numeric>

#include "hivetorus/errors.hpp"
#include "hivetorus/hive_lr.hpp"

using namespace hivetorus;

namespace {

std::uint64_t count(std::vector<long> l, std::vector<long> m, std::vector<long> v) {
  return count_hives(make_boundary(std::move(l), std::move(m), std::move(v)));
}

std::uint64_t oracle(std::vector<long> l, std::vector<long> m, std::vector<long> v) {
  return lr_tableau_oracle(make_boundary(std::move(l), std::move(m), std::move(v)));
}

long weight(const std::vector<long>& p) { return std::accumulate(p.begin(), p.end(), 0L); }

}  // namespace

TEST_CASE("boundary values are partial sums") {
  const HiveBoundary b = make_boundary({1, 0}, {1, 0}, {1, 1}, 2);
  const TriangleHive h = boundary_values(b);
  // Left side from the bottom corner up: 0, l1, l1 + l2.
  CHECK(h.at(2, 0) == 0);
  CHECK(h.at(1, 0) == 1);
  CHECK(h.at(0, 0) == 1);
  // Right side from the top down: |l|, |l| + m1, |l| + m1 + m2.
  CHECK(h.at(1, 1) == 2);
  CHECK(h.at(2, 2) == 2);
  // Bottom: 0, v1, v1 + v2.
  CHECK(h.at(2, 1) == 1);

  const TriangleHive z = boundary_values(make_boundary({0, 0, 0}, {0, 0, 0}, {0, 0, 0}, 3));
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; j <= i; ++j) CHECK(z.at(i, j) == 0);
  }
}

TEST_CASE("invalid boundaries are rejected") {
  CHECK_THROWS_AS(make_boundary({1}, {1}, {1}), InvalidArgument);
  CHECK_THROWS_AS(make_boundary({1, 2}, {1}, {2, 2}), InvalidArgument);
  CHECK_THROWS_AS(make_boundary({1, -1}, {1}, {1}), InvalidArgument);
  CHECK_THROWS_AS(make_boundary({1, 1, 1}, {0}, {3}, 2), InvalidArgument);
  HiveBoundary raw{2, {1, 0}, {1}, {2, 0}};
  CHECK_THROWS_AS(validate(raw), InvalidArgument);
  CHECK_THROWS_AS(boundary_values(raw), InvalidArgument);
}

TEST_CASE("small LR coefficients") {
  CHECK(count({1, 0}, {1, 0}, {1, 1}) == 1);
  CHECK(count({1, 0}, {1, 0}, {2, 0}) == 1);
  CHECK(count({2, 1, 0}, {2, 1, 0}, {3, 2, 1}) == 2);
  CHECK(oracle({1, 0}, {1, 0}, {1, 1}) == 1);
  CHECK(oracle({2, 1, 0}, {2, 1, 0}, {3, 2, 1}) == 2);
  CHECK(oracle({2, 1}, {2, 1}, {4, 2}) == 1);
  CHECK(count({2, 1}, {2, 1}, {4, 2}) == 1);
  // Non-containment gives zero.
  CHECK(oracle({3}, {1}, {2, 2}) == 0);
  CHECK(count({3}, {1}, {2, 2}) == 0);
}

TEST_CASE("empty lambda gives one") {
  for (const auto& mu : partitions(5, 3)) {
    CHECK(oracle({0}, mu, mu) == 1);
    CHECK(count({0}, mu, mu) == 1);
  }
}

TEST_CASE("hive counter matches the tableau oracle on the full sweep") {
  int cases = 0;
  for (int n = 1; n <= 4; ++n) {
    for (long total = 0; total <= 8; ++total) {
      for (const auto& nu : partitions(total, n)) {
        for (long a = 0; a <= total; ++a) {
          for (const auto& lam : partitions(a, n)) {
            for (const auto& mu : partitions(total - a, n)) {
              const HiveBoundary b{n, lam, mu, nu};
              const std::uint64_t h = count_hives(b);
              CHECK(h == lr_tableau_oracle(b));
              CHECK(h == count_hives(HiveBoundary{n, mu, lam, nu}));
              ++cases;
            }
          }
        }
      }
    }
  }
  CHECK(cases > 1000);
}

TEST_CASE("padding with zero parts keeps the count") {
  for (long total = 0; total <= 6; ++total) {
    for (const auto& nu : partitions(total, 3)) {
      for (long a = 0; a <= total; ++a) {
        for (const auto& lam : partitions(a, 3)) {
          for (const auto& mu : partitions(total - a, 3)) {
            const std::uint64_t c3 = count_hives({3, lam, mu, nu});
            auto pad = [](std::vector<long> p) {
              p.push_back(0);
              return p;
            };
            CHECK(count_hives({4, pad(lam), pad(mu), pad(nu)}) == c3);
          }
        }
      }
    }
  }
}

TEST_CASE("rhombus inequalities and enumeration guards") {
  CHECK(triangle_rhombi(1).empty());
  CHECK(triangle_rhombi(2).size() == 3);
  CHECK(triangle_rhombi(3).size() == 9);
  TriangleHive h = boundary_values(make_boundary({2, 1, 0}, {2, 1, 0}, {3, 2, 1}));
  h.at(2, 1) = 3;
  const bool a = is_hive(h);
  h.at(2, 1) = 4;
  const bool b = is_hive(h);
  h.at(2, 1) = 100;
  CHECK_FALSE(is_hive(h));
  CHECK((a || b));
  const auto big = make_boundary({1}, {1}, {1, 1}, 7);
  CHECK_THROWS_AS(count_hives(big), InvalidArgument);
  CHECK_THROWS_AS(lr_tableau_oracle(make_boundary({7}, {6}, {13})), InvalidArgument);
}

TEST_CASE("partitions enumerates every partition") {
  CHECK(partitions(4, 4).size() == 5);
  CHECK(partitions(5, 2).size() == 3);
  CHECK(partitions(0, 3).size() == 1);
  for (const auto& p : partitions(7, 3)) {
    CHECK(weight(p) == 7);
    CHECK(p.size() == 3);
  }
}
