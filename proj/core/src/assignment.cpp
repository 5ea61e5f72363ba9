#include "treepack/assignment.hpp"

#include <algorithm>
#include <set>

#include "treepack/errors.hpp"
#include "treepack/union_find.hpp"
#include "treepack/wpc.hpp"

namespace treepack {

namespace {

bool in_support(const std::vector<int>& support, int v) {
  return std::binary_search(support.begin(), support.end(), v);
}

AssignmentDiagnostic fail(const std::string& label, const std::string& condition,
                          const std::string& message) {
  AssignmentDiagnostic d;
  d.ok = false;
  d.label = label;
  d.condition = condition;
  d.message = message;
  return d;
}

}  // namespace

AssignmentDiagnostic validate_assignment(const TreeAssignment& a) {
  const auto& h = a.host;
  if (static_cast<int>(a.trees.size()) != h.edge_count()) {
    return fail("", "wrong edge count",
                "assignment has " + std::to_string(a.trees.size()) + " trees for " +
                    std::to_string(h.edge_count()) + " hyperedges");
  }
  for (int i = 0; i < h.edge_count(); ++i) {
    const auto& e = h.edge(i);
    const auto& tree = a.trees[i];
    for (const auto& [u, v] : tree) {
      if (u == v) {
        return fail(e.label, "cyclic", "self-loop at vertex " + std::to_string(u));
      }
      if (!in_support(e.support, u) || !in_support(e.support, v)) {
        return fail(e.label, "wrong vertex set",
                    "edge {" + std::to_string(u) + "," + std::to_string(v) +
                        "} leaves the support");
      }
    }
    if (tree.size() + 1 != e.support.size()) {
      return fail(e.label, "wrong edge count",
                  "tree has " + std::to_string(tree.size()) + " edges, support needs " +
                      std::to_string(e.support.size() - 1));
    }
    UnionFind uf(static_cast<int>(e.support.size()));
    auto local = [&](int v) {
      return static_cast<int>(std::lower_bound(e.support.begin(), e.support.end(), v) -
                              e.support.begin());
    };
    for (const auto& [u, v] : tree) {
      if (!uf.unite(local(u), local(v))) {
        return fail(e.label, "cyclic",
                    "edge {" + std::to_string(u) + "," + std::to_string(v) +
                        "} closes a cycle");
      }
    }
    if (uf.components() > 1) {
      return fail(e.label, "disconnected", "tree does not span the support");
    }
  }
  AssignmentDiagnostic ok;
  ok.ok = true;
  return ok;
}

LabelledMultigraph flatten(const TreeAssignment& a) {
  AssignmentDiagnostic d = validate_assignment(a);
  if (!d.ok) {
    throw InputError("invalid tree assignment (" + d.label + ": " + d.condition + ")");
  }
  LabelledMultigraph g;
  g.vertex_names = a.host.vertex_names();
  for (int i = 0; i < a.host.edge_count(); ++i) {
    g.labels.push_back(a.host.edge(i).label);
    int slot = 0;
    for (const auto& [u, v] : a.trees[i]) {
      g.edges.push_back(LabelledEdge{u, v, i, slot++});
    }
  }
  return g;
}

TreeAssignment star_assignment(const LabelledMultihypergraph& h, const CenterMap& centers) {
  if (static_cast<int>(centers.center.size()) != h.edge_count()) {
    throw InputError("center map size does not match hyperedge count");
  }
  TreeAssignment a{h, {}};
  a.trees.resize(h.edge_count());
  for (int i = 0; i < h.edge_count(); ++i) {
    const auto& e = h.edge(i);
    int c = centers.center[i];
    if (!in_support(e.support, c)) {
      throw InputError("center of " + e.label + " lies outside its support");
    }
    if (e.support.size() == 2) {
      a.trees[i].emplace_back(e.support[0], e.support[1]);
      continue;
    }
    for (int u : e.support) {
      if (u == c) continue;
      a.trees[i].emplace_back(std::min(c, u), std::max(c, u));
    }
  }
  return a;
}

std::optional<int> star_center_of(const std::vector<std::pair<int, int>>& tree,
                                  const std::vector<int>& support) {
  if (support.size() < 2 || tree.size() + 1 != support.size()) return std::nullopt;
  std::set<std::pair<int, int>> have;
  for (const auto& [u, v] : tree) {
    if (!have.insert({std::min(u, v), std::max(u, v)}).second) return std::nullopt;
  }
  for (int c : support) {
    std::set<std::pair<int, int>> star;
    for (int u : support) {
      if (u != c) star.insert({std::min(c, u), std::max(c, u)});
    }
    if (star == have) return c;
  }
  return std::nullopt;
}

bool is_star_minimal(const TreeAssignment& a) {
  for (int i = 0; i < a.host.edge_count(); ++i) {
    const auto& e = a.host.edge(i);
    if (e.support.size() < 3) continue;
    if (!star_center_of(a.trees[i], e.support)) return false;
  }
  return true;
}

CenterMap star_centers(const TreeAssignment& a) {
  CenterMap centers;
  for (int i = 0; i < a.host.edge_count(); ++i) {
    const auto& e = a.host.edge(i);
    auto c = star_center_of(a.trees[i], e.support);
    if (!c) throw InputError("tree of " + e.label + " is not a star on its support");
    centers.center.push_back(*c);
  }
  return centers;
}

long long crossing_count(const LabelledMultigraph& g, const Partition& p) {
  if (p.size() != g.t()) throw InputError("partition size does not match graph");
  long long n = 0;
  for (const auto& e : g.edges) {
    if (p.block_of(e.u) != p.block_of(e.v)) ++n;
  }
  return n;
}

long long crossing_count(const LabelledMultigraph& g, const Partition& p, int label_index) {
  if (p.size() != g.t()) throw InputError("partition size does not match graph");
  long long n = 0;
  for (const auto& e : g.edges) {
    if (e.label_index == label_index && p.block_of(e.u) != p.block_of(e.v)) ++n;
  }
  return n;
}

StarCrossing star_crossing_decomposition(const std::vector<int>& support, int center,
                                         const Partition& p) {
  if (!in_support(support, center)) throw InputError("star center lies outside the support");
  StarCrossing r{};
  std::set<int> blocks;
  int cb = p.block_of(center);
  for (int u : support) {
    if (u < 0 || u >= p.size()) throw InputError("support vertex outside the partition");
    blocks.insert(p.block_of(u));
    if (u != center && p.block_of(u) != cb) ++r.crossing;
  }
  r.incidence_minus_one = static_cast<int>(blocks.size()) - 1;
  r.lambda = r.crossing - r.incidence_minus_one;
  return r;
}

TightnessResult is_partition_tight(const TreeAssignment& a, const Caps& caps) {
  AssignmentDiagnostic d = validate_assignment(a);
  if (!d.ok) {
    throw InputError("invalid tree assignment (" + d.label + ": " + d.condition + ")");
  }
  const int t = a.host.t();
  if (t > caps.max_partition_vertices) {
    throw LimitError("vertex count exceeds the partition enumeration cap");
  }
  TightnessResult result;
  result.tight = true;
  for (int i = 0; i < a.host.edge_count() && result.tight; ++i) {
    const auto& e = a.host.edge(i);
    for_each_partition(t, [&](const Partition& p) {
      long long cr = 0;
      for (const auto& [u, v] : a.trees[i]) {
        if (p.block_of(u) != p.block_of(v)) ++cr;
      }
      std::set<int> blocks;
      for (int u : e.support) blocks.insert(p.block_of(u));
      if (cr != static_cast<long long>(blocks.size()) - 1) {
        result.tight = false;
        result.witness = {e.label, p};
        return false;
      }
      return true;
    });
  }
  return result;
}

std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& support,
                                               const std::vector<int>& seq) {
  const int m = static_cast<int>(support.size());
  if (m < 2) throw InputError("prufer_decode needs at least two vertices");
  if (static_cast<int>(seq.size()) != m - 2) {
    throw InputError("prufer sequence must have length |support|-2");
  }
  std::vector<int> local_seq;
  for (int s : seq) {
    if (!in_support(support, s)) throw InputError("prufer entry outside the support");
    local_seq.push_back(static_cast<int>(std::lower_bound(support.begin(), support.end(), s) -
                                         support.begin()));
  }
  std::vector<int> degree(m, 1);
  for (int s : local_seq) ++degree[s];
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> used(m, false);
  for (int s : local_seq) {
    int leaf = -1;
    for (int v = 0; v < m; ++v) {
      if (!used[v] && degree[v] == 1) {
        leaf = v;
        break;
      }
    }
    used[leaf] = true;
    --degree[leaf];
    --degree[s];
    int a = support[leaf];
    int b = support[s];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  int x = -1, y = -1;
  for (int v = 0; v < m; ++v) {
    if (!used[v] && degree[v] == 1) (x < 0 ? x : y) = v;
  }
  edges.emplace_back(support[x], support[y]);
  return edges;
}

std::vector<std::vector<std::pair<int, int>>> labelled_trees_on(const std::vector<int>& support) {
  const int m = static_cast<int>(support.size());
  if (m < 2) throw InputError("labelled_trees_on needs at least two vertices");
  if (m == 2) return {{{support[0], support[1]}}};
  std::vector<std::vector<std::pair<int, int>>> trees;
  std::vector<int> idx(m - 2, 0);
  while (true) {
    std::vector<int> seq;
    for (int i : idx) seq.push_back(support[i]);
    trees.push_back(prufer_decode(support, seq));
    int pos = m - 3;
    while (pos >= 0 && idx[pos] == m - 1) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++idx[pos];
  }
  return trees;
}

bool enumerate_assignments(const LabelledMultihypergraph& h,
                           const std::function<bool(const TreeAssignment&)>& visit,
                           const Caps& caps) {
  for (const auto& e : h.edges()) {
    if (static_cast<int>(e.support.size()) > caps.max_support_size) {
      throw LimitError("support of " + e.label + " exceeds the tree enumeration cap");
    }
  }
  std::vector<std::vector<std::vector<std::pair<int, int>>>> options;
  for (const auto& e : h.edges()) options.push_back(labelled_trees_on(e.support));
  const int n = h.edge_count();
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    TreeAssignment a{h, {}};
    for (int i = 0; i < n; ++i) a.trees.push_back(options[i][idx[i]]);
    if (!visit(a)) return false;
    int pos = n - 1;
    while (pos >= 0 && idx[pos] + 1 == options[pos].size()) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) return true;
    ++idx[pos];
  }
}

long long assignment_count(const LabelledMultihypergraph& h, const Caps& caps) {
  long long n = 1;
  for (const auto& e : h.edges()) {
    const int m = static_cast<int>(e.support.size());
    if (m > caps.max_support_size) {
      throw LimitError("support of " + e.label + " exceeds the tree enumeration cap");
    }
    long long trees = 1;
    for (int i = 0; i < m - 2; ++i) trees *= m;
    n *= trees;
  }
  return n;
}

}  // namespace treepack
