#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "msts/geometry.hpp"

namespace {

using msts::Point;
using msts::Segment;

double frand(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
}

// Exhaustive spanning-tree oracle: decode every Pruefer sequence of length
// n - 2 and take the cheapest tree. Independent of the Prim implementation.
double min_spanning_cost_exhaustive(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n == 1) return 0.0;
  if (n == 2) return msts::point_distance(pts[0], pts[1]);
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> seq(n - 2, 0);
  while (true) {
    // decode
    std::vector<int> degree(n, 1);
    for (int v : seq) degree[v]++;
    double cost = 0.0;
    std::vector<int> deg = degree;
    std::vector<bool> used(n, false);
    for (int v : seq) {
      for (int leaf = 0; leaf < n; ++leaf) {
        if (deg[leaf] == 1 && !used[leaf]) {
          cost += msts::point_distance(pts[leaf], pts[v]);
          used[leaf] = true;
          deg[v]--;
          break;
        }
      }
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (!used[v] && deg[v] == 1) {
        if (u < 0) {
          u = v;
        } else {
          cost += msts::point_distance(pts[u], pts[v]);
        }
      }
    }
    best = std::min(best, cost);
    // next sequence
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    seq[i]++;
  }
  return best;
}

}  // namespace

TEST_CASE("point and segment distances") {
  CHECK(msts::point_distance({0, 0}, {3, 4}) == doctest::Approx(5.0));
  Segment s{{0, 0}, {4, 0}};
  CHECK(msts::point_segment_distance({2, 3}, s) == doctest::Approx(3.0));
  CHECK(msts::point_segment_distance({-3, 4}, s) == doctest::Approx(5.0));
  CHECK(msts::point_segment_distance({1, 0}, s) == doctest::Approx(0.0));
  // degenerate segment behaves like a point
  Segment pt{{1, 1}, {1, 1}};
  CHECK(msts::point_segment_distance({4, 5}, pt) == doctest::Approx(5.0));
  CHECK(pt.length() == doctest::Approx(0.0));
}

TEST_CASE("segment intersection and disjointness") {
  Segment s{{0, 0}, {2, 2}};
  CHECK(msts::segments_intersect(s, {{0, 2}, {2, 0}}));
  CHECK_FALSE(msts::segments_intersect(s, {{3, 0}, {4, 0}}));
  // touching at one point counts as intersecting, hence not disjoint
  CHECK(msts::segments_intersect(s, {{2, 2}, {3, 1}}));
  CHECK_FALSE(msts::segments_disjoint(s, {{2, 2}, {3, 1}}));
  // collinear overlap
  CHECK(msts::segments_intersect({{0, 0}, {4, 0}}, {{2, 0}, {6, 0}}));
  // collinear but separated
  CHECK_FALSE(msts::segments_intersect({{0, 0}, {1, 0}}, {{2, 0}, {3, 0}}));
  CHECK(msts::segments_disjoint({{0, 0}, {1, 0}}, {{2, 0}, {3, 0}}));
}

TEST_CASE("segment distance") {
  CHECK(msts::segment_distance({{0, 0}, {1, 0}}, {{0, 3}, {1, 3}}) == doctest::Approx(3.0));
  CHECK(msts::segment_distance({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}) == doctest::Approx(0.0));
  CHECK(msts::segment_distance({{0, 0}, {1, 0}}, {{4, 4}, {4, 9}}) ==
        doctest::Approx(std::hypot(3.0, 4.0)));
}

TEST_CASE("euclidean mst on known configurations") {
  // unit square: three sides
  std::vector<Point> sq = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  auto t = msts::euclidean_mst(sq);
  CHECK(t.cost == doctest::Approx(3.0));
  CHECK(t.edges.size() == 3);
  for (auto& [u, v] : t.edges) CHECK(u < v);
  CHECK(std::is_sorted(t.edges.begin(), t.edges.end()));

  std::vector<Point> one = {{5, 5}};
  CHECK(msts::euclidean_mst(one).cost == doctest::Approx(0.0));
  CHECK_THROWS_AS(msts::euclidean_mst(std::vector<Point>{}), std::invalid_argument);
}

TEST_CASE("euclidean mst matches exhaustive spanning-tree minimum") {
  std::mt19937_64 rng(20240825);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);  // up to 7 points
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back({frand(rng, -5, 5), frand(rng, -5, 5)});
    auto t = msts::euclidean_mst(pts);
    double oracle = min_spanning_cost_exhaustive(pts);
    CHECK(t.cost == doctest::Approx(oracle).epsilon(1e-9));
    // edge costs add up
    double sum = 0.0;
    for (auto& [u, v] : t.edges) sum += msts::point_distance(pts[u], pts[v]);
    CHECK(sum == doctest::Approx(t.cost));
  }
}

TEST_CASE("euclidean mst is deterministic under cost ties") {
  // four corners of a square admit several optimal trees; repeated runs must
  // agree edge for edge
  std::vector<Point> sq = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  auto t1 = msts::euclidean_mst(sq);
  auto t2 = msts::euclidean_mst(sq);
  CHECK(t1.edges == t2.edges);
}
