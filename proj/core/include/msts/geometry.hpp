#pragma once

#include <span>
#include <utility>
#include <vector>

namespace msts {

// Absolute tolerance for coordinate/point equality.
inline constexpr double kCoordEps = 1e-12;
// Relative tolerance for cost comparisons.
inline constexpr double kCostRelTol = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

bool points_equal(const Point& p, const Point& q);

// Unordered pair of endpoints. Zero length (a == b) is permitted.
struct Segment {
  Point a;
  Point b;

  double length() const;
};

// Spanning tree over an ordered point set. Edges are index pairs with
// first < second, sorted; cost is the sum of Euclidean edge lengths.
struct PointTree {
  std::vector<Point> nodes;
  std::vector<std::pair<int, int>> edges;
  double cost = 0.0;
};

double point_distance(const Point& p, const Point& q);

double point_segment_distance(const Point& p, const Segment& s);

bool segments_intersect(const Segment& s, const Segment& t);

// Minimum Euclidean distance between any point of s and any point of t.
double segment_distance(const Segment& s, const Segment& t);

// Strict disjointness: touching counts as non-disjoint.
bool segments_disjoint(const Segment& s, const Segment& t);

// Dense Prim, O(n^2). Deterministic: candidate edges compare by
// (weight, min index, max index). Throws std::invalid_argument on empty input.
PointTree euclidean_mst(std::span<const Point> points);

}  // namespace msts
