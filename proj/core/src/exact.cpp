#include "msts/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <tuple>

#include "msts/errors.hpp"

namespace msts {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Depth-first search over choice vectors in lexicographic order. The lower
// bound at a partial assignment is the MST over "supersegments" where the
// distance between two segments is the minimum distance over their still
// allowed candidate points; this never exceeds the cost of any completion.
class ChoiceSearch {
 public:
  ChoiceSearch(const std::vector<std::vector<Point>>& options, const BnBConfig& cfg)
      : options_(options), cfg_(cfg), n_(static_cast<int>(options.size())) {
    offsets_.resize(static_cast<size_t>(n_) + 1, 0);
    for (int i = 0; i < n_; ++i) {
      if (options_[static_cast<size_t>(i)].empty()) {
        throw std::invalid_argument("segment with no candidate points");
      }
      offsets_[static_cast<size_t>(i) + 1] =
          offsets_[static_cast<size_t>(i)] +
          static_cast<int>(options_[static_cast<size_t>(i)].size());
      for (const auto& p : options_[static_cast<size_t>(i)]) points_.push_back(p);
    }
    const int m = static_cast<int>(points_.size());
    dist_.assign(static_cast<size_t>(m) * static_cast<size_t>(m), 0.0);
    for (int p = 0; p < m; ++p) {
      for (int q = p + 1; q < m; ++q) {
        const double d = point_distance(points_[static_cast<size_t>(p)],
                                        points_[static_cast<size_t>(q)]);
        dist_[idx(p, q)] = d;
        dist_[idx(q, p)] = d;
      }
    }
    if (cfg_.use_lower_bound) {
      min_free_free_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), 0.0);
      min_fixed_free_.assign(static_cast<size_t>(m) * static_cast<size_t>(n_), 0.0);
      for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
          if (i == j) continue;
          double ff = kInf;
          for (int p = offsets_[static_cast<size_t>(i)];
               p < offsets_[static_cast<size_t>(i) + 1]; ++p) {
            double best = kInf;
            for (int q = offsets_[static_cast<size_t>(j)];
                 q < offsets_[static_cast<size_t>(j) + 1]; ++q) {
              best = std::min(best, dist_[idx(p, q)]);
            }
            min_fixed_free_[static_cast<size_t>(p) * static_cast<size_t>(n_) +
                            static_cast<size_t>(j)] = best;
            ff = std::min(ff, best);
          }
          min_free_free_[static_cast<size_t>(i) * static_cast<size_t>(n_) +
                         static_cast<size_t>(j)] = ff;
        }
      }
    }
    chosen_.assign(static_cast<size_t>(n_), 0);
    best_cost_ = kInf;
  }

  MultiChoiceResult run() {
    if (n_ == 0) return {};
    descend(0);
    MultiChoiceResult result;
    result.choices = best_choices_;
    result.cost = best_cost_;
    return result;
  }

 private:
  size_t idx(int p, int q) const {
    return static_cast<size_t>(p) * points_.size() + static_cast<size_t>(q);
  }

  void charge_node() {
    ++nodes_;
    if (cfg_.node_budget != 0 && nodes_ > cfg_.node_budget) {
      ChoiceSolution best;
      if (best_cost_ < kInf) {
        best.choices = best_choices_;
        best.cost = best_cost_;
      }
      throw BudgetExceeded("budget exceeded", std::move(best));
    }
  }

  void descend(int depth) {
    charge_node();
    if (depth == n_) {
      evaluate_leaf();
      return;
    }
    if (cfg_.use_lower_bound && best_cost_ < kInf && depth > 0) {
      const double slack = kCostRelTol * std::max(1.0, std::abs(best_cost_));
      if (lower_bound(depth) > best_cost_ + slack) return;
    }
    const int count = static_cast<int>(options_[static_cast<size_t>(depth)].size());
    for (int c = 0; c < count; ++c) {
      chosen_[static_cast<size_t>(depth)] = c;
      descend(depth + 1);
    }
  }

  void evaluate_leaf() {
    std::vector<Point> pts(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      pts[static_cast<size_t>(i)] =
          options_[static_cast<size_t>(i)][static_cast<size_t>(chosen_[static_cast<size_t>(i)])];
    }
    const double cost = euclidean_mst(pts).cost;
    if (cost < best_cost_) {
      best_cost_ = cost;
      best_choices_ = chosen_;
    }
  }

  // Distance between supersegments i and j given the first `depth` segments
  // are pinned to their chosen candidate.
  double super_dist(int i, int j, int depth) const {
    if (i > j) std::swap(i, j);
    if (j < depth) {
      const int p = offsets_[static_cast<size_t>(i)] + chosen_[static_cast<size_t>(i)];
      const int q = offsets_[static_cast<size_t>(j)] + chosen_[static_cast<size_t>(j)];
      return dist_[idx(p, q)];
    }
    if (i < depth) {
      const int p = offsets_[static_cast<size_t>(i)] + chosen_[static_cast<size_t>(i)];
      return min_fixed_free_[static_cast<size_t>(p) * static_cast<size_t>(n_) +
                             static_cast<size_t>(j)];
    }
    return min_free_free_[static_cast<size_t>(i) * static_cast<size_t>(n_) +
                          static_cast<size_t>(j)];
  }

  double lower_bound(int depth) {
    if (n_ == 1) return 0.0;
    lb_in_tree_.assign(static_cast<size_t>(n_), 0);
    lb_best_.assign(static_cast<size_t>(n_), kInf);
    lb_in_tree_[0] = 1;
    for (int j = 1; j < n_; ++j) lb_best_[static_cast<size_t>(j)] = super_dist(0, j, depth);
    double total = 0.0;
    for (int step = 1; step < n_; ++step) {
      int pick = -1;
      for (int j = 0; j < n_; ++j) {
        if (lb_in_tree_[static_cast<size_t>(j)]) continue;
        if (pick < 0 || lb_best_[static_cast<size_t>(j)] < lb_best_[static_cast<size_t>(pick)]) {
          pick = j;
        }
      }
      total += lb_best_[static_cast<size_t>(pick)];
      lb_in_tree_[static_cast<size_t>(pick)] = 1;
      for (int j = 0; j < n_; ++j) {
        if (lb_in_tree_[static_cast<size_t>(j)]) continue;
        lb_best_[static_cast<size_t>(j)] =
            std::min(lb_best_[static_cast<size_t>(j)], super_dist(pick, j, depth));
      }
    }
    return total;
  }

  const std::vector<std::vector<Point>>& options_;
  BnBConfig cfg_;
  int n_;
  std::vector<int> offsets_;
  std::vector<Point> points_;
  std::vector<double> dist_;
  std::vector<double> min_free_free_;
  std::vector<double> min_fixed_free_;
  std::vector<int> chosen_;
  std::vector<int> best_choices_;
  double best_cost_ = kInf;
  std::uint64_t nodes_ = 0;
  std::vector<char> lb_in_tree_;
  std::vector<double> lb_best_;
};

}  // namespace

MultiChoiceResult best_choice_over_sets(const std::vector<std::vector<Point>>& options,
                                        const BnBConfig& cfg) {
  return ChoiceSearch(options, cfg).run();
}

ChoiceSolution brute_force_msts(const Instance& inst, const BnBConfig& cfg) {
  const int n = inst.size();
  if (n > 48) throw GuardError("instance too large for exact solver");
  if (n == 0) throw std::invalid_argument("brute_force_msts: empty instance");

  std::vector<std::vector<Point>> options(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    options[static_cast<size_t>(i)] = {inst.segments[static_cast<size_t>(i)].a,
                                       inst.segments[static_cast<size_t>(i)].b};
  }
  const auto result = best_choice_over_sets(options, cfg);
  auto sol = solution_from_choices(inst, result.choices);
  sol.guarantee = 1.0;
  return sol;
}

namespace {

struct Apsp {
  int n = 0;
  std::vector<double> dist;
  std::vector<int> next;  // next hop on a shortest path, -1 if unreachable

  double d(int u, int v) const {
    return dist[static_cast<size_t>(u) * static_cast<size_t>(n) + static_cast<size_t>(v)];
  }
  int hop(int u, int v) const {
    return next[static_cast<size_t>(u) * static_cast<size_t>(n) + static_cast<size_t>(v)];
  }
};

Apsp all_pairs(int n, const std::vector<WeightedEdge>& edges) {
  Apsp g;
  g.n = n;
  g.dist.assign(static_cast<size_t>(n) * static_cast<size_t>(n), kInf);
  g.next.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
  auto at = [n](int u, int v) {
    return static_cast<size_t>(u) * static_cast<size_t>(n) + static_cast<size_t>(v);
  };
  for (int v = 0; v < n; ++v) {
    g.dist[at(v, v)] = 0.0;
    g.next[at(v, v)] = v;
  }
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.w < 0.0) throw std::invalid_argument("negative edge weight");
    if (e.u == e.v) continue;
    if (e.w < g.dist[at(e.u, e.v)]) {
      g.dist[at(e.u, e.v)] = e.w;
      g.dist[at(e.v, e.u)] = e.w;
      g.next[at(e.u, e.v)] = e.v;
      g.next[at(e.v, e.u)] = e.u;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int u = 0; u < n; ++u) {
      const double duk = g.dist[at(u, k)];
      if (duk == kInf) continue;
      for (int v = 0; v < n; ++v) {
        const double cand = duk + g.dist[at(k, v)];
        if (cand < g.dist[at(u, v)]) {
          g.dist[at(u, v)] = cand;
          g.next[at(u, v)] = g.next[at(u, k)];
        }
      }
    }
  }
  return g;
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(static_cast<size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<size_t>(b)] = a;
    return true;
  }
};

}  // namespace

GraphTree exact_steiner(int num_nodes, const std::vector<WeightedEdge>& edges,
                        const std::vector<int>& terminals) {
  if (num_nodes <= 0) throw std::invalid_argument("exact_steiner: no nodes");
  if (terminals.empty()) throw std::invalid_argument("exact_steiner: no terminals");
  if (terminals.size() > 14) {
    throw GuardError("exact_steiner: too many terminals (> 14)");
  }
  for (int t : terminals) {
    if (t < 0 || t >= num_nodes) throw std::invalid_argument("terminal out of range");
  }
  if (terminals.size() == 1) return {};

  const Apsp g = all_pairs(num_nodes, edges);
  const int n = num_nodes;
  const int k = static_cast<int>(terminals.size()) - 1;  // root is terminals.back()
  const int root = terminals.back();
  const int full = (1 << k) - 1;

  for (int i = 0; i < k; ++i) {
    if (g.d(terminals[static_cast<size_t>(i)], root) == kInf) {
      throw GuardError("exact_steiner: no Steiner tree (terminals disconnected)");
    }
  }

  // dp[mask][v]: cheapest tree spanning {terminals[i] : i in mask} plus v.
  std::vector<std::vector<double>> dp(static_cast<size_t>(full) + 1,
                                      std::vector<double>(static_cast<size_t>(n), kInf));
  std::vector<std::vector<int>> move_from(static_cast<size_t>(full) + 1,
                                          std::vector<int>(static_cast<size_t>(n), -1));
  std::vector<std::vector<int>> merge_sub(static_cast<size_t>(full) + 1,
                                          std::vector<int>(static_cast<size_t>(n), 0));

  for (int i = 0; i < k; ++i) {
    const int mask = 1 << i;
    for (int v = 0; v < n; ++v) {
      dp[static_cast<size_t>(mask)][static_cast<size_t>(v)] =
          g.d(terminals[static_cast<size_t>(i)], v);
      move_from[static_cast<size_t>(mask)][static_cast<size_t>(v)] =
          terminals[static_cast<size_t>(i)];
    }
  }

  std::vector<double> pre(static_cast<size_t>(n));
  std::vector<int> pre_sub(static_cast<size_t>(n));
  for (int mask = 1; mask <= full; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;  // single terminal handled above
    for (int v = 0; v < n; ++v) {
      pre[static_cast<size_t>(v)] = kInf;
      pre_sub[static_cast<size_t>(v)] = 0;
      for (int sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
        if (sub > (mask ^ sub)) continue;  // each split once
        const double cand = dp[static_cast<size_t>(sub)][static_cast<size_t>(v)] +
                            dp[static_cast<size_t>(mask ^ sub)][static_cast<size_t>(v)];
        if (cand < pre[static_cast<size_t>(v)]) {
          pre[static_cast<size_t>(v)] = cand;
          pre_sub[static_cast<size_t>(v)] = sub;
        }
      }
    }
    // Relax through the metric closure; one pass suffices since g.d is a metric.
    for (int v = 0; v < n; ++v) {
      double best = kInf;
      int best_u = -1;
      for (int u = 0; u < n; ++u) {
        if (pre[static_cast<size_t>(u)] == kInf) continue;
        const double cand = pre[static_cast<size_t>(u)] + g.d(u, v);
        if (cand < best) {
          best = cand;
          best_u = u;
        }
      }
      dp[static_cast<size_t>(mask)][static_cast<size_t>(v)] = best;
      move_from[static_cast<size_t>(mask)][static_cast<size_t>(v)] = best_u;
      merge_sub[static_cast<size_t>(mask)][static_cast<size_t>(v)] =
          best_u >= 0 ? pre_sub[static_cast<size_t>(best_u)] : 0;
    }
  }

  const double opt = dp[static_cast<size_t>(full)][static_cast<size_t>(root)];
  if (opt == kInf) {
    throw GuardError("exact_steiner: no Steiner tree (terminals disconnected)");
  }

  // Reconstruct: walk merge/move decisions, expanding metric edges into paths.
  std::set<std::pair<int, int>> tree_edges;
  auto add_path = [&](int u, int v) {
    while (u != v) {
      const int w = g.hop(u, v);
      if (w < 0) throw InternalError("exact_steiner: broken shortest-path hop");
      tree_edges.insert({std::min(u, w), std::max(u, w)});
      u = w;
    }
  };
  std::vector<std::pair<int, int>> pending{{full, root}};
  while (!pending.empty()) {
    const auto [mask, v] = pending.back();
    pending.pop_back();
    if ((mask & (mask - 1)) == 0) {
      int term = -1;
      for (int i = 0; i < k; ++i) {
        if (mask == (1 << i)) term = terminals[static_cast<size_t>(i)];
      }
      add_path(term, v);
      continue;
    }
    const int u = move_from[static_cast<size_t>(mask)][static_cast<size_t>(v)];
    const int sub = merge_sub[static_cast<size_t>(mask)][static_cast<size_t>(v)];
    add_path(u, v);
    pending.emplace_back(sub, u);
    pending.emplace_back(mask ^ sub, u);
  }

  // The reconstruction may revisit edges across branches; take the MST of the
  // collected subgraph and prune non-terminal leaves to obtain a clean tree.
  std::vector<char> is_terminal(static_cast<size_t>(n), 0);
  for (int t : terminals) is_terminal[static_cast<size_t>(t)] = 1;

  std::vector<std::tuple<double, int, int>> sorted_edges;
  for (const auto& [u, v] : tree_edges) sorted_edges.emplace_back(g.d(u, v), u, v);
  std::sort(sorted_edges.begin(), sorted_edges.end());

  DisjointSet dsu(n);
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  std::vector<std::pair<int, int>> kept;
  for (const auto& [w, u, v] : sorted_edges) {
    if (dsu.unite(u, v)) {
      kept.emplace_back(u, v);
      adj[static_cast<size_t>(u)].push_back(v);
      adj[static_cast<size_t>(v)].push_back(u);
    }
  }

  std::vector<int> degree(static_cast<size_t>(n), 0);
  std::set<std::pair<int, int>> kept_set(kept.begin(), kept.end());
  for (const auto& [u, v] : kept) {
    ++degree[static_cast<size_t>(u)];
    ++degree[static_cast<size_t>(v)];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (degree[static_cast<size_t>(v)] == 1 && !is_terminal[static_cast<size_t>(v)]) {
        for (int u : adj[static_cast<size_t>(v)]) {
          const auto key = std::make_pair(std::min(u, v), std::max(u, v));
          if (kept_set.erase(key)) {
            --degree[static_cast<size_t>(u)];
            --degree[static_cast<size_t>(v)];
            changed = true;
          }
        }
      }
    }
  }

  GraphTree result;
  result.edges.assign(kept_set.begin(), kept_set.end());
  for (const auto& [u, v] : result.edges) result.cost += g.d(u, v);
  if (std::abs(result.cost - opt) > kCostRelTol * std::max(1.0, std::abs(opt))) {
    throw InternalError("exact_steiner: reconstructed tree disagrees with DP value");
  }
  return result;
}

Max2SatResult max2sat_brute(const Cnf2Formula& formula) {
  const int n = formula.num_vars;
  if (n > 24) throw GuardError("max2sat_brute: too many variables (> 24)");

  Max2SatResult best;
  best.satisfied = -1;
  std::vector<bool> assignment(static_cast<size_t>(n), false);
  const std::uint64_t total = n >= 0 ? (std::uint64_t{1} << n) : 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    // x1 is the most significant bit: enumeration is lexicographic with
    // false < true, so the first maximizer is the lexicographically smallest.
    for (int i = 0; i < n; ++i) {
      assignment[static_cast<size_t>(i)] = (code >> (n - 1 - i)) & 1u;
    }
    const int sat = satisfied_count(formula, assignment);
    if (sat > best.satisfied) {
      best.satisfied = sat;
      best.assignment = assignment;
    }
  }
  if (n == 0) {
    best.satisfied = satisfied_count(formula, {});
    best.assignment = {};
  }
  return best;
}

}  // namespace msts
