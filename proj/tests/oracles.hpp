// Independent reference implementations used only by tests.  Everything here
// deliberately avoids the library's own algorithms: partitions come from a
// recursive placement search instead of the restricted-growth odometer, tree
// checks walk the graph instead of using union-find, and decomposition
// enumeration tries every one of the k^|E| layer maps with no pruning.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "treepack/assignment.hpp"
#include "treepack/decomposition.hpp"
#include "treepack/hypergraph.hpp"
#include "treepack/support_weights.hpp"

namespace oracles {

/// Every set partition of {0..t-1} as a block-of vector with blocks numbered
/// in first-occurrence order.
inline std::vector<std::vector<int>> all_partitions(int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> assign(t, 0);
  auto rec = [&](auto&& self, int v, int used) -> void {
    if (v == t) {
      out.push_back(assign);
      return;
    }
    for (int b = 0; b <= used; ++b) {
      assign[v] = b;
      self(self, v + 1, b == used ? used + 1 : used);
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// Spanning-tree check by adjacency-list depth first search.
inline bool is_spanning_tree(int t, const std::vector<std::pair<int, int>>& edges) {
  if (static_cast<int>(edges.size()) != t - 1) return false;
  std::vector<std::vector<int>> adj(t);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= t || v < 0 || v >= t || u == v) return false;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(t, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  // t-1 edges and connected rules out cycles.
  return reached == t;
}

/// Every layer map in 0..k-1 per edge whose layers are all spanning trees.
/// No pruning, no union-find; the ground truth for the enumerator.
inline std::vector<std::vector<int>> all_decompositions(const treepack::LabelledMultigraph& g,
                                                        int k) {
  std::vector<std::vector<int>> out;
  const int m = g.edge_count();
  std::vector<int> layer(m, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      std::vector<std::pair<int, int>> edges;
      for (int j = 0; j < m; ++j) {
        if (layer[j] == i) edges.emplace_back(g.edges[j].u, g.edges[j].v);
      }
      ok = is_spanning_tree(g.t(), edges);
    }
    if (ok) out.push_back(layer);
    int pos = m - 1;
    while (pos >= 0 && layer[pos] == k - 1) {
      layer[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++layer[pos];
  }
  return out;
}

/// Membership-scan route to the support hypergraph edge sets.
inline std::vector<std::vector<int>> support_edges(const treepack::IndexFamily& f) {
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= f.n; ++s) {
    std::vector<int> e;
    for (std::size_t j = 0; j < f.sets.size(); ++j) {
      for (int x : f.sets[j]) {
        if (x == s) {
          e.push_back(static_cast<int>(j));
          break;
        }
      }
    }
    if (e.size() >= 2) out.push_back(e);
  }
  return out;
}

/// Random spanning tree on the given sorted support by attaching each vertex
/// to a uniformly chosen earlier one in a shuffled order.
inline std::vector<std::pair<int, int>> random_tree(std::mt19937& rng,
                                                    const std::vector<int>& support) {
  std::vector<int> order = support;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i < order.size(); ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    int u = order[pick(rng)];
    int v = order[i];
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

inline treepack::Partition random_partition(std::mt19937& rng, int t) {
  std::vector<int> assign(t);
  std::uniform_int_distribution<int> pick(0, t - 1);
  for (int v = 0; v < t; ++v) assign[v] = pick(rng);
  return treepack::Partition::from_assignment(assign);
}

/// A random k-critical hypergraph together with a valid assignment and
/// decomposition: k random spanning trees, each randomly split into
/// edge-disjoint subtrees, every subtree becoming one hyperedge whose
/// assigned tree it is and whose layer is its tree's index.
struct RandomCritical {
  treepack::LabelledMultihypergraph hypergraph;
  treepack::TreeAssignment assignment;
  treepack::KTreeDecomposition decomposition;
};

inline RandomCritical random_critical_instance(std::mt19937& rng, int t, int k) {
  std::vector<int> all(t);
  for (int i = 0; i < t; ++i) all[i] = i;

  std::vector<std::string> names;
  for (int i = 1; i <= t; ++i) names.push_back("v" + std::to_string(i));

  std::vector<treepack::HyperedgeOccurrence> hedges;
  std::vector<std::vector<std::pair<int, int>>> trees;
  std::vector<int> layer_by_edge;

  for (int i = 0; i < k; ++i) {
    auto tree = random_tree(rng, all);
    // Start with one class per tree edge, then randomly merge classes that
    // share a vertex; the union of two vertex-sharing subtrees of one tree
    // is again a subtree.
    std::vector<std::vector<std::pair<int, int>>> classes;
    for (const auto& e : tree) classes.push_back({e});
    std::uniform_int_distribution<int> merges(0, t - 1);
    int rounds = merges(rng);
    for (int r = 0; r < rounds && classes.size() > 1; ++r) {
      std::uniform_int_distribution<std::size_t> pick(0, classes.size() - 1);
      std::size_t x = pick(rng);
      std::set<int> verts;
      for (const auto& [u, v] : classes[x]) {
        verts.insert(u);
        verts.insert(v);
      }
      for (std::size_t y = 0; y < classes.size(); ++y) {
        if (y == x) continue;
        bool touches = false;
        for (const auto& [u, v] : classes[y]) {
          if (verts.count(u) || verts.count(v)) touches = true;
        }
        if (touches) {
          classes[x].insert(classes[x].end(), classes[y].begin(), classes[y].end());
          classes.erase(classes.begin() + static_cast<long>(y));
          break;
        }
      }
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
      std::set<int> verts;
      for (const auto& [u, v] : classes[c]) {
        verts.insert(u);
        verts.insert(v);
      }
      std::vector<int> support(verts.begin(), verts.end());
      std::string label = "t" + std::to_string(i) + "c" + std::to_string(c);
      hedges.push_back({label, support});
      std::sort(classes[c].begin(), classes[c].end());
      trees.push_back(classes[c]);
      layer_by_edge.push_back(i);
    }
  }

  treepack::LabelledMultihypergraph h(names, hedges);
  treepack::TreeAssignment a{h, trees};
  treepack::KTreeDecomposition d;
  d.k = k;
  for (std::size_t e = 0; e < trees.size(); ++e) {
    for (std::size_t j = 0; j < trees[e].size(); ++j) d.layer_of.push_back(layer_by_edge[e]);
  }
  return RandomCritical{h, a, d};
}

inline treepack::IndexFamily random_index_family(std::mt19937& rng, int max_n, int max_t) {
  std::uniform_int_distribution<int> pick_n(1, max_n);
  std::uniform_int_distribution<int> pick_t(2, max_t);
  int n = pick_n(rng);
  int t = pick_t(rng);
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<std::vector<int>> sets(t);
  for (int j = 0; j < t; ++j) {
    for (int x = 1; x <= n; ++x) {
      if (coin(rng) == 0) sets[j].push_back(x);
    }
  }
  return treepack::make_index_family(n, std::move(sets));
}

}  // namespace oracles
