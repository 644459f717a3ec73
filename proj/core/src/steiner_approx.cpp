#include "msts/steiner_approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <tuple>

#include "msts/errors.hpp"

namespace msts {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

bool AuxGraph::has_edge(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= node_count() || v >= node_count()) return false;
  const int su = segment_of(u);
  const int sv = segment_of(v);
  if (su == sv) {
    // Only endpoint-to-terminal edges inside a segment; no (a, b) edge.
    return is_terminal(u) != is_terminal(v);
  }
  return !is_terminal(u) && !is_terminal(v);
}

double AuxGraph::edge_weight(int u, int v) const {
  if (!has_edge(u, v)) throw std::invalid_argument("AuxGraph: no such edge");
  if (is_terminal(u) || is_terminal(v)) return 0.0;
  return point_distance(coords[static_cast<size_t>(u)], coords[static_cast<size_t>(v)]);
}

std::vector<WeightedEdge> AuxGraph::edge_list() const {
  std::vector<WeightedEdge> edges;
  const int n = num_segments;
  for (int i = 0; i < n; ++i) {
    edges.push_back({endpoint_a(i), terminal(i), 0.0});
    edges.push_back({endpoint_b(i), terminal(i), 0.0});
  }
  for (int u = 0; u < node_count(); ++u) {
    if (is_terminal(u)) continue;
    for (int v = u + 1; v < node_count(); ++v) {
      if (is_terminal(v) || segment_of(u) == segment_of(v)) continue;
      edges.push_back({u, v, point_distance(coords[static_cast<size_t>(u)],
                                            coords[static_cast<size_t>(v)])});
    }
  }
  return edges;
}

std::vector<int> AuxGraph::terminal_nodes() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(num_segments));
  for (int i = 0; i < num_segments; ++i) out.push_back(terminal(i));
  return out;
}

AuxGraph build_aux_graph(const Instance& inst) {
  AuxGraph g;
  g.num_segments = inst.size();
  g.coords.resize(static_cast<size_t>(3 * inst.size()));
  for (int i = 0; i < inst.size(); ++i) {
    g.coords[static_cast<size_t>(AuxGraph::endpoint_a(i))] = inst.segments[static_cast<size_t>(i)].a;
    g.coords[static_cast<size_t>(AuxGraph::endpoint_b(i))] = inst.segments[static_cast<size_t>(i)].b;
  }
  return g;
}

double steiner_edge_weight(const AuxGraph& g, int u, int v) {
  if (AuxGraph::is_terminal(u) && AuxGraph::is_terminal(v)) {
    throw std::invalid_argument("edge between two terminals");
  }
  if (AuxGraph::is_terminal(u) || AuxGraph::is_terminal(v)) {
    const int t = AuxGraph::is_terminal(u) ? u : v;
    const int e = AuxGraph::is_terminal(u) ? v : u;
    if (AuxGraph::segment_of(t) != AuxGraph::segment_of(e)) {
      throw std::invalid_argument("terminal attached to a foreign endpoint");
    }
    return 0.0;
  }
  return point_distance(g.coords[static_cast<size_t>(u)], g.coords[static_cast<size_t>(v)]);
}

double steiner_tree_cost(const AuxGraph& g, const std::vector<std::pair<int, int>>& edges) {
  double cost = 0.0;
  for (const auto& [u, v] : edges) cost += steiner_edge_weight(g, u, v);
  return cost;
}

namespace {

// Adjacency view of a Steiner tree over auxiliary-graph node ids.
struct TreeView {
  std::vector<char> present;
  std::vector<std::set<int>> adj;

  explicit TreeView(int node_count)
      : present(static_cast<size_t>(node_count), 0),
        adj(static_cast<size_t>(node_count)) {}

  void add_edge(int u, int v) {
    present[static_cast<size_t>(u)] = 1;
    present[static_cast<size_t>(v)] = 1;
    adj[static_cast<size_t>(u)].insert(v);
    adj[static_cast<size_t>(v)].insert(u);
  }

  void remove_node(int v) {
    for (int u : adj[static_cast<size_t>(v)]) adj[static_cast<size_t>(u)].erase(v);
    adj[static_cast<size_t>(v)].clear();
    present[static_cast<size_t>(v)] = 0;
  }

  int degree(int v) const { return static_cast<int>(adj[static_cast<size_t>(v)].size()); }

  std::vector<std::pair<int, int>> edge_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
      for (int v : adj[static_cast<size_t>(u)]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  int node_count() const {
    int c = 0;
    for (char p : present) c += p;
    return c;
  }

  bool is_tree() const {
    const int nodes = node_count();
    if (nodes == 0) return true;
    const auto edges = edge_pairs();
    if (static_cast<int>(edges.size()) != nodes - 1) return false;
    // Connectivity by BFS from any present node.
    int start = -1;
    for (int v = 0; v < static_cast<int>(present.size()); ++v) {
      if (present[static_cast<size_t>(v)]) {
        start = v;
        break;
      }
    }
    std::vector<char> seen(present.size(), 0);
    std::vector<int> queue{start};
    seen[static_cast<size_t>(start)] = 1;
    int visited = 0;
    while (!queue.empty()) {
      const int v = queue.back();
      queue.pop_back();
      ++visited;
      for (int u : adj[static_cast<size_t>(v)]) {
        if (!seen[static_cast<size_t>(u)]) {
          seen[static_cast<size_t>(u)] = 1;
          queue.push_back(u);
        }
      }
    }
    return visited == nodes;
  }
};

// Remove non-terminal leaves, but never strand a terminal: a leaf whose only
// neighbor is a degree-1 terminal stays (it is that terminal's anchor).
void prune_nonterminal_leaves(TreeView& tree) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < static_cast<int>(tree.present.size()); ++v) {
      if (!tree.present[static_cast<size_t>(v)] || AuxGraph::is_terminal(v)) continue;
      if (tree.degree(v) != 1) continue;
      const int u = *tree.adj[static_cast<size_t>(v)].begin();
      if (AuxGraph::is_terminal(u) && tree.degree(u) == 1) continue;
      tree.remove_node(v);
      changed = true;
    }
  }
}

double tree_cost(const AuxGraph& g, const TreeView& tree) {
  return steiner_tree_cost(g, tree.edge_pairs());
}

SteinerResult to_result(const AuxGraph& g, const TreeView& tree, double guarantee) {
  SteinerResult result;
  result.edges = tree.edge_pairs();
  std::sort(result.edges.begin(), result.edges.end());
  result.cost = steiner_tree_cost(g, result.edges);
  result.guarantee_factor = guarantee;
  return result;
}

double ccw_angle(const Point& origin, const Point& target) {
  const double a = std::atan2(target.y - origin.y, target.x - origin.x);
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  return a < 0.0 ? a + kTwoPi : a;
}

// Neighbors sorted counterclockwise around `pivot`; angle ties break by
// increasing distance, then node index. Terminals carry no coordinates and
// are excluded here.
std::vector<int> ccw_order(const AuxGraph& g, const Point& pivot, std::vector<int> nodes) {
  std::sort(nodes.begin(), nodes.end(), [&](int lhs, int rhs) {
    const Point& lp = g.coords[static_cast<size_t>(lhs)];
    const Point& rp = g.coords[static_cast<size_t>(rhs)];
    return std::make_tuple(ccw_angle(pivot, lp), point_distance(pivot, lp), lhs) <
           std::make_tuple(ccw_angle(pivot, rp), point_distance(pivot, rp), rhs);
  });
  return nodes;
}

}  // namespace

SteinerResult approx_steiner(const AuxGraph& g) {
  const int n = g.num_segments;
  SteinerResult empty;
  empty.guarantee_factor = 2.0;
  if (n == 0) return empty;

  TreeView tree(g.node_count());
  if (n == 1) {
    tree.add_edge(AuxGraph::endpoint_a(0), AuxGraph::terminal(0));
    return to_result(g, tree, 2.0);
  }

  // Terminal metric: minimum endpoint-pair distance between segments. The
  // shortest o_i - o_j path in the auxiliary graph is always
  // o_i - endpoint_i - endpoint_j - o_j.
  std::vector<std::vector<double>> dist(static_cast<size_t>(n),
                                        std::vector<double>(static_cast<size_t>(n), 0.0));
  std::vector<std::vector<std::pair<int, int>>> via(
      static_cast<size_t>(n), std::vector<std::pair<int, int>>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double best = kInf;
      std::pair<int, int> pair{-1, -1};
      for (int u : {AuxGraph::endpoint_a(i), AuxGraph::endpoint_b(i)}) {
        for (int v : {AuxGraph::endpoint_a(j), AuxGraph::endpoint_b(j)}) {
          const double d = point_distance(g.coords[static_cast<size_t>(u)],
                                          g.coords[static_cast<size_t>(v)]);
          if (d < best) {
            best = d;
            pair = {u, v};
          }
        }
      }
      dist[static_cast<size_t>(i)][static_cast<size_t>(j)] = best;
      dist[static_cast<size_t>(j)][static_cast<size_t>(i)] = best;
      via[static_cast<size_t>(i)][static_cast<size_t>(j)] = pair;
      via[static_cast<size_t>(j)][static_cast<size_t>(i)] = pair;
    }
  }

  // Prim over terminals with (weight, min index, max index) tie-break.
  std::vector<char> in_tree(static_cast<size_t>(n), 0);
  std::vector<double> best_w(static_cast<size_t>(n), kInf);
  std::vector<int> best_from(static_cast<size_t>(n), -1);
  in_tree[0] = 1;
  for (int j = 1; j < n; ++j) {
    best_w[static_cast<size_t>(j)] = dist[0][static_cast<size_t>(j)];
    best_from[static_cast<size_t>(j)] = 0;
  }
  auto key = [&](int j) {
    return std::make_tuple(best_w[static_cast<size_t>(j)],
                           std::min(best_from[static_cast<size_t>(j)], j),
                           std::max(best_from[static_cast<size_t>(j)], j));
  };

  std::set<std::pair<int, int>> union_edges;
  std::vector<std::tuple<double, int, int>> weighted_union;
  auto add_union_edge = [&](int u, int v) {
    const auto edge = std::make_pair(std::min(u, v), std::max(u, v));
    if (union_edges.insert(edge).second) {
      weighted_union.emplace_back(steiner_edge_weight(g, edge.first, edge.second),
                                  edge.first, edge.second);
    }
  };

  for (int step = 1; step < n; ++step) {
    int pick = -1;
    for (int j = 0; j < n; ++j) {
      if (in_tree[static_cast<size_t>(j)]) continue;
      if (pick < 0 || key(j) < key(pick)) pick = j;
    }
    const int from = best_from[static_cast<size_t>(pick)];
    in_tree[static_cast<size_t>(pick)] = 1;
    const int lo = std::min(from, pick);
    const int hi = std::max(from, pick);
    const auto [u, v] = via[static_cast<size_t>(lo)][static_cast<size_t>(hi)];
    // Expand the metric edge: o_lo - u - v - o_hi.
    add_union_edge(AuxGraph::terminal(lo), u);
    add_union_edge(u, v);
    add_union_edge(v, AuxGraph::terminal(hi));
    for (int j = 0; j < n; ++j) {
      if (in_tree[static_cast<size_t>(j)]) continue;
      const double w = dist[static_cast<size_t>(pick)][static_cast<size_t>(j)];
      const auto cand = std::make_tuple(w, std::min(pick, j), std::max(pick, j));
      if (cand < key(j)) {
        best_w[static_cast<size_t>(j)] = w;
        best_from[static_cast<size_t>(j)] = pick;
      }
    }
  }

  // The union of expanded paths may contain cycles: keep its MST, then prune.
  std::sort(weighted_union.begin(), weighted_union.end());
  std::vector<int> parent(static_cast<size_t>(g.node_count()));
  for (int i = 0; i < g.node_count(); ++i) parent[static_cast<size_t>(i)] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (const auto& [w, u, v] : weighted_union) {
    const int ru = find(u);
    const int rv = find(v);
    if (ru == rv) continue;
    parent[static_cast<size_t>(rv)] = ru;
    tree.add_edge(u, v);
  }
  prune_nonterminal_leaves(tree);
  if (!tree.is_tree()) throw InternalError("approx_steiner: result is not a tree");
  return to_result(g, tree, 2.0);
}

SteinerResult exact_steiner_subroutine(const AuxGraph& g) {
  if (g.num_segments == 1) {
    SteinerResult result;
    result.edges = {{AuxGraph::endpoint_a(0), AuxGraph::terminal(0)}};
    result.guarantee_factor = 1.0;
    return result;
  }
  const auto tree = exact_steiner(g.node_count(), g.edge_list(), g.terminal_nodes());
  SteinerResult result;
  result.edges = tree.edges;
  result.cost = tree.cost;
  result.guarantee_factor = 1.0;
  return result;
}

SteinerResult repair_tree(const AuxGraph& g, const SteinerResult& st) {
  const int n = g.num_segments;
  TreeView tree(g.node_count());
  for (const auto& [u, v] : st.edges) tree.add_edge(u, v);
  if (n == 0) return to_result(g, tree, st.guarantee_factor);
  if (!tree.is_tree()) throw std::invalid_argument("repair_tree: input is not a tree");

  prune_nonterminal_leaves(tree);

  auto bad_segments_exist = [&]() {
    for (int i = 0; i < n; ++i) {
      if (tree.present[static_cast<size_t>(AuxGraph::endpoint_a(i))] &&
          tree.present[static_cast<size_t>(AuxGraph::endpoint_b(i))]) {
        return true;
      }
    }
    return false;
  };
  if (!bad_segments_exist()) return to_result(g, tree, st.guarantee_factor);

  // Root: non-terminal node with lexicographically smallest (x, y).
  int root = -1;
  for (int v = 0; v < g.node_count(); ++v) {
    if (!tree.present[static_cast<size_t>(v)] || AuxGraph::is_terminal(v)) continue;
    if (root < 0) {
      root = v;
      continue;
    }
    const Point& rp = g.coords[static_cast<size_t>(root)];
    const Point& vp = g.coords[static_cast<size_t>(v)];
    if (std::make_tuple(vp.x, vp.y, v) < std::make_tuple(rp.x, rp.y, root)) root = v;
  }
  if (root < 0) throw InternalError("repair_tree: no non-terminal node");

  // Pre-order walk, children counterclockwise (terminal children last). Push a
  // segment the moment its second endpoint shows up.
  std::vector<int> stack_of_bad;
  std::vector<char> endpoint_seen(static_cast<size_t>(n), 0);
  std::vector<std::pair<int, int>> walk{{root, -1}};
  while (!walk.empty()) {
    const auto [v, parent_node] = walk.back();
    walk.pop_back();
    if (!AuxGraph::is_terminal(v)) {
      const int seg = AuxGraph::segment_of(v);
      if (endpoint_seen[static_cast<size_t>(seg)]) {
        stack_of_bad.push_back(seg);
      } else {
        endpoint_seen[static_cast<size_t>(seg)] = 1;
      }
    }
    std::vector<int> plain;
    std::vector<int> terminals;
    for (int u : tree.adj[static_cast<size_t>(v)]) {
      if (u == parent_node) continue;
      (AuxGraph::is_terminal(u) ? terminals : plain).push_back(u);
    }
    std::vector<int> ordered;
    if (AuxGraph::is_terminal(v)) {
      // A terminal has no coordinates; fall back to index order.
      std::sort(plain.begin(), plain.end());
      ordered = plain;
    } else {
      ordered = ccw_order(g, g.coords[static_cast<size_t>(v)], std::move(plain));
    }
    std::sort(terminals.begin(), terminals.end());
    ordered.insert(ordered.end(), terminals.begin(), terminals.end());
    // LIFO walk: push in reverse so children are visited in `ordered` order.
    for (auto it = ordered.rbegin(); it != ordered.rend(); ++it) {
      walk.emplace_back(*it, v);
    }
  }

  while (!stack_of_bad.empty()) {
    const int seg = stack_of_bad.back();
    stack_of_bad.pop_back();
    const int ea = AuxGraph::endpoint_a(seg);
    const int eb = AuxGraph::endpoint_b(seg);
    const int term = AuxGraph::terminal(seg);
    if (!tree.present[static_cast<size_t>(ea)] || !tree.present[static_cast<size_t>(eb)]) {
      throw InternalError("repair_tree: stacked segment lost an endpoint");
    }

    const bool term_a = tree.adj[static_cast<size_t>(term)].count(ea) > 0;
    const bool term_b = tree.adj[static_cast<size_t>(term)].count(eb) > 0;
    int bad = -1;
    bool partner_in_chain = false;
    if (term_a && term_b) {
      // The terminal bridges both endpoints. Drop the endpoint carrying more
      // non-zero weight (tie: higher node index); its side reconnects through
      // the kept endpoint, which keeps its zero-weight terminal edge.
      auto real_weight = [&](int e) {
        double w = 0.0;
        for (int u : tree.adj[static_cast<size_t>(e)]) {
          if (!AuxGraph::is_terminal(u)) w += steiner_edge_weight(g, e, u);
        }
        return w;
      };
      const double wa = real_weight(ea);
      const double wb = real_weight(eb);
      bad = wa > wb ? ea : (wb > wa ? eb : std::max(ea, eb));
      partner_in_chain = true;
    } else if (term_a) {
      bad = eb;
    } else if (term_b) {
      bad = ea;
    } else {
      throw InternalError("repair_tree: terminal detached from its segment");
    }

    const int partner = bad == ea ? eb : ea;
    std::set<int> chain_set;
    for (int u : tree.adj[static_cast<size_t>(bad)]) {
      if (!AuxGraph::is_terminal(u)) chain_set.insert(u);
    }
    if (partner_in_chain) chain_set.insert(partner);

    tree.remove_node(bad);
    const auto chain = ccw_order(g, g.coords[static_cast<size_t>(bad)],
                                 std::vector<int>(chain_set.begin(), chain_set.end()));
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
      tree.add_edge(chain[i], chain[i + 1]);
    }
    if (!tree.is_tree()) throw InternalError("repair_tree: chaining broke the tree");
  }

  prune_nonterminal_leaves(tree);
  auto result = to_result(g, tree, st.guarantee_factor);
  if (result.cost > 2.0 * st.cost + kCostRelTol * std::max(1.0, st.cost)) {
    throw InternalError("repair_tree: repaired cost exceeds twice the input cost");
  }
  return result;
}

ChoiceSolution solve_approx(const Instance& inst) {
  return solve_approx(inst, approx_steiner);
}

ChoiceSolution solve_approx(const Instance& inst, const SteinerSubroutine& subroutine) {
  const int n = inst.size();
  if (n == 0) throw std::invalid_argument("solve_approx: empty instance");

  const AuxGraph g = build_aux_graph(inst);
  const SteinerResult st = subroutine(g);
  const SteinerResult repaired = repair_tree(g, st);

  std::vector<int> choices(static_cast<size_t>(n), -1);
  std::vector<char> present(static_cast<size_t>(g.node_count()), 0);
  for (const auto& [u, v] : repaired.edges) {
    present[static_cast<size_t>(u)] = 1;
    present[static_cast<size_t>(v)] = 1;
  }
  if (n == 1 && repaired.edges.empty()) {
    throw InternalError("solve_approx: repaired tree lost its endpoint");
  }
  for (int i = 0; i < n; ++i) {
    const bool has_a = present[static_cast<size_t>(AuxGraph::endpoint_a(i))] != 0;
    const bool has_b = present[static_cast<size_t>(AuxGraph::endpoint_b(i))] != 0;
    if (has_a == has_b) {
      throw InternalError("solve_approx: repaired tree is not a valid choice");
    }
    choices[static_cast<size_t>(i)] = has_a ? 0 : 1;
  }

  ChoiceSolution sol;
  sol.choices = choices;
  sol.tree.nodes.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    sol.tree.nodes[static_cast<size_t>(i)] =
        choices[static_cast<size_t>(i)] == 0 ? inst.segments[static_cast<size_t>(i)].a
                                             : inst.segments[static_cast<size_t>(i)].b;
  }
  for (const auto& [u, v] : repaired.edges) {
    if (AuxGraph::is_terminal(u) || AuxGraph::is_terminal(v)) continue;
    const int su = AuxGraph::segment_of(u);
    const int sv = AuxGraph::segment_of(v);
    sol.tree.edges.emplace_back(std::min(su, sv), std::max(su, sv));
    sol.tree.cost += point_distance(g.coords[static_cast<size_t>(u)],
                                    g.coords[static_cast<size_t>(v)]);
  }
  std::sort(sol.tree.edges.begin(), sol.tree.edges.end());
  sol.cost = sol.tree.cost;
  if (std::abs(sol.cost - repaired.cost) > kCostRelTol * std::max(1.0, repaired.cost)) {
    throw InternalError("solve_approx: mapped cost disagrees with repaired tree");
  }
  sol.guarantee = 2.0 * st.guarantee_factor;
  return sol;
}

}  // namespace msts
