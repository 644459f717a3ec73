#include "msts/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace msts {

bool points_equal(const Point& p, const Point& q) {
  return std::abs(p.x - q.x) <= kCoordEps && std::abs(p.y - q.y) <= kCoordEps;
}

double Segment::length() const { return point_distance(a, b); }

double point_distance(const Point& p, const Point& q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

double point_segment_distance(const Point& p, const Segment& s) {
  const double dx = s.b.x - s.a.x;
  const double dy = s.b.y - s.a.y;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return point_distance(p, s.a);
  double t = ((p.x - s.a.x) * dx + (p.y - s.a.y) * dy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return point_distance(p, Point{s.a.x + t * dx, s.a.y + t * dy});
}

namespace {

int orientation(const Point& a, const Point& b, const Point& c) {
  const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  if (v > 0.0) return 1;
  if (v < 0.0) return -1;
  return 0;
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(const Segment& s, const Segment& t) {
  const int o1 = orientation(s.a, s.b, t.a);
  const int o2 = orientation(s.a, s.b, t.b);
  const int o3 = orientation(t.a, t.b, s.a);
  const int o4 = orientation(t.a, t.b, s.b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(s.a, s.b, t.a)) return true;
  if (o2 == 0 && on_segment(s.a, s.b, t.b)) return true;
  if (o3 == 0 && on_segment(t.a, t.b, s.a)) return true;
  if (o4 == 0 && on_segment(t.a, t.b, s.b)) return true;
  return false;
}

double segment_distance(const Segment& s, const Segment& t) {
  if (segments_intersect(s, t)) return 0.0;
  double d = point_segment_distance(s.a, t);
  d = std::min(d, point_segment_distance(s.b, t));
  d = std::min(d, point_segment_distance(t.a, s));
  d = std::min(d, point_segment_distance(t.b, s));
  return d;
}

bool segments_disjoint(const Segment& s, const Segment& t) {
  return segment_distance(s, t) > 0.0;
}

PointTree euclidean_mst(std::span<const Point> points) {
  const int n = static_cast<int>(points.size());
  if (n == 0) throw std::invalid_argument("euclidean_mst: empty point set");

  PointTree tree;
  tree.nodes.assign(points.begin(), points.end());
  if (n == 1) return tree;

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<char> in_tree(n, 0);
  std::vector<double> best_w(n, kInf);
  std::vector<int> best_from(n, -1);

  in_tree[0] = 1;
  for (int j = 1; j < n; ++j) {
    best_w[j] = point_distance(points[0], points[j]);
    best_from[j] = 0;
  }

  auto key = [&](int j) {
    const int u = std::min(best_from[j], j);
    const int v = std::max(best_from[j], j);
    return std::make_tuple(best_w[j], u, v);
  };

  for (int step = 1; step < n; ++step) {
    int pick = -1;
    for (int j = 0; j < n; ++j) {
      if (in_tree[j] || best_from[j] < 0) continue;
      if (pick < 0 || key(j) < key(pick)) pick = j;
    }
    in_tree[pick] = 1;
    tree.edges.emplace_back(std::min(best_from[pick], pick),
                            std::max(best_from[pick], pick));
    for (int j = 0; j < n; ++j) {
      if (in_tree[j]) continue;
      const double w = point_distance(points[pick], points[j]);
      const auto cand = std::make_tuple(w, std::min(pick, j), std::max(pick, j));
      if (cand < key(j)) {
        best_w[j] = w;
        best_from[j] = pick;
      }
    }
  }

  std::sort(tree.edges.begin(), tree.edges.end());
  tree.cost = 0.0;
  for (const auto& [u, v] : tree.edges) tree.cost += point_distance(points[u], points[v]);
  return tree;
}

}  // namespace msts
