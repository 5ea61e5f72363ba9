#include "treepack/certificate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "treepack/errors.hpp"
#include "treepack/union_find.hpp"
#include "treepack/wpc.hpp"

namespace treepack {

namespace {

CertificateDiagnostic cfail(const std::string& condition, const std::string& message,
                            bool star_minimal_required) {
  CertificateDiagnostic d;
  d.ok = false;
  d.condition = condition;
  d.message = message;
  d.star_minimal_required = star_minimal_required;
  return d;
}

std::pair<int, int> norm(std::pair<int, int> e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  return e;
}

}  // namespace

CertificateDiagnostic verify_certificate(const TwoSidedStarCertificate& c,
                                         bool require_star_minimal) {
  const auto& h = c.assignment.host;
  if (c.k < 1) return cfail("shape", "layer count must be positive", require_star_minimal);
  if (c.decomposition.k != c.k) {
    return cfail("shape", "decomposition layer count differs from certificate k",
                 require_star_minimal);
  }
  if (static_cast<int>(c.layers.layer.size()) != h.edge_count()) {
    return cfail("shape", "layer map does not cover every hyperedge", require_star_minimal);
  }
  for (int i = 0; i < h.edge_count(); ++i) {
    if (c.layers.layer[i] < 0 || c.layers.layer[i] >= c.k) {
      return cfail("shape", "layer of " + h.edge(i).label + " is out of range",
                   require_star_minimal);
    }
  }

  AssignmentDiagnostic ad = validate_assignment(c.assignment);
  if (!ad.ok) {
    return cfail("invalid assignment", ad.label + ": " + ad.condition + " (" + ad.message + ")",
                 require_star_minimal);
  }
  if (require_star_minimal && !is_star_minimal(c.assignment)) {
    return cfail("not star-minimal", "some hyperedge of size at least 3 is not assigned a star",
                 require_star_minimal);
  }

  LabelledMultigraph g = flatten(c.assignment);
  DecompositionDiagnostic dd = validate_decomposition(g, c.decomposition);
  if (!dd.ok) {
    return cfail("invalid decomposition", dd.condition + " (" + dd.message + ")",
                 require_star_minimal);
  }

  for (std::size_t j = 0; j < g.edges.size(); ++j) {
    int want = c.layers.layer[g.edges[j].label_index];
    if (c.decomposition.layer_of[j] != want) {
      return cfail("layer containment violated",
                   "an edge of " + g.labels[g.edges[j].label_index] + " lies outside layer " +
                       std::to_string(want),
                   require_star_minimal);
    }
  }

  for (int i = 0; i < h.edge_count(); ++i) {
    int l = c.layers.layer[i];
    if (l >= 1 && l <= c.k - 2 && h.edge(i).support.size() != 2) {
      return cfail("interior rank-two violated",
                   h.edge(i).label + " has size " + std::to_string(h.edge(i).support.size()) +
                       " but sits in interior layer " + std::to_string(l),
                   require_star_minimal);
    }
  }

  // Direct accounting pass: each layer's tree must be exactly the union of
  // the trees the layer map sends to it.
  for (int i = 0; i < c.k; ++i) {
    std::multiset<std::pair<int, int>> from_tree;
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
      if (c.decomposition.layer_of[j] == i) from_tree.insert(norm({g.edges[j].u, g.edges[j].v}));
    }
    std::multiset<std::pair<int, int>> from_labels;
    for (int e = 0; e < h.edge_count(); ++e) {
      if (c.layers.layer[e] != i) continue;
      for (const auto& pr : c.assignment.trees[e]) from_labels.insert(norm(pr));
    }
    if (from_tree != from_labels) {
      return cfail("layer accounting violated",
                   "layer " + std::to_string(i) + " is not the union of its assigned trees",
                   require_star_minimal);
    }
  }

  CertificateDiagnostic ok;
  ok.ok = true;
  ok.star_minimal_required = require_star_minimal;
  return ok;
}

QuotientRankBound layer_quotient_rank_bound(int t,
                                            const std::vector<std::pair<int, int>>& tree_edges,
                                            const std::vector<LabelClass>& classes,
                                            const Partition& p) {
  if (p.size() != t) throw InputError("partition size does not match vertex count");
  if (static_cast<int>(tree_edges.size()) != t - 1) {
    throw InputError("tree edge count must be t-1");
  }
  UnionFind span(t);
  for (const auto& [u, v] : tree_edges) {
    if (u < 0 || u >= t || v < 0 || v >= t) throw InputError("tree edge endpoint out of range");
    if (!span.unite(u, v)) throw InputError("tree edges contain a cycle");
  }
  if (span.components() > 1) throw InputError("tree edges do not span");

  std::multiset<std::pair<int, int>> pool;
  for (const auto& e : tree_edges) pool.insert(norm(e));
  for (const auto& cls : classes) {
    for (const auto& e : cls.edges) {
      int u = e.first, v = e.second;
      if (!std::binary_search(cls.support.begin(), cls.support.end(), u) ||
          !std::binary_search(cls.support.begin(), cls.support.end(), v)) {
        throw InputError("class edge leaves its hyperedge");
      }
      auto it = pool.find(norm(e));
      if (it == pool.end()) throw InputError("classes do not partition the tree edges");
      pool.erase(it);
    }
  }
  if (!pool.empty()) throw InputError("classes do not partition the tree edges");

  QuotientRankBound r;
  // Contract each block to a point, drop the loops, and read the graphic
  // rank off a union-find pass over the surviving edges.
  UnionFind quot(p.num_blocks());
  int rank = 0;
  for (const auto& [u, v] : tree_edges) {
    int bu = p.block_of(u), bv = p.block_of(v);
    if (bu != bv && quot.unite(bu, bv)) ++rank;
  }
  r.lhs = rank;
  r.rhs = 0;
  for (const auto& cls : classes) {
    std::set<int> blocks;
    for (int v : cls.support) {
      if (v < 0 || v >= t) throw InputError("class support vertex out of range");
      blocks.insert(p.block_of(v));
    }
    r.rhs += static_cast<long long>(blocks.size()) - 1;
  }
  r.holds = r.lhs <= r.rhs;
  return r;
}

CertifiedWpcResult certified_wpc(const TwoSidedStarCertificate& c, const Caps& caps,
                                 bool require_star_minimal) {
  CertificateDiagnostic d = verify_certificate(c, require_star_minimal);
  if (!d.ok) throw InputError("certificate invalid: " + d.condition + " (" + d.message + ")");
  const auto& h = c.assignment.host;
  const int t = h.t();
  if (t > caps.max_partition_vertices) {
    throw LimitError("vertex count exceeds the partition enumeration cap");
  }

  std::vector<std::vector<LabelClass>> classes(c.k);
  for (int e = 0; e < h.edge_count(); ++e) {
    classes[c.layers.layer[e]].push_back(LabelClass{h.edge(e).support, c.assignment.trees[e]});
  }
  std::vector<std::vector<std::pair<int, int>>> layer_edges(c.k);
  LabelledMultigraph g = flatten(c.assignment);
  for (std::size_t j = 0; j < g.edges.size(); ++j) {
    layer_edges[c.decomposition.layer_of[j]].emplace_back(g.edges[j].u, g.edges[j].v);
  }

  CertifiedWpcResult result;
  result.holds = true;
  for_each_partition(t, [&](const Partition& p) {
    CertifiedWpcEntry entry{p, {}, 0};
    long long w = 0;
    for (int i = 0; i < c.k; ++i) {
      QuotientRankBound b = layer_quotient_rank_bound(t, layer_edges[i], classes[i], p);
      entry.layer_slack.push_back(b.rhs - b.lhs);
      w += b.rhs;
      if (!b.holds) result.holds = false;
    }
    entry.total_margin = w - static_cast<long long>(c.k) * (p.num_blocks() - 1);
    result.ledger.push_back(std::move(entry));
    return true;
  });
  return result;
}

UniquenessResult certified_uniqueness(const TwoSidedStarCertificate& c, const Caps& caps,
                                      bool require_star_minimal) {
  CertificateDiagnostic d = verify_certificate(c, require_star_minimal);
  if (!d.ok) throw InputError("certificate invalid: " + d.condition + " (" + d.message + ")");
  const auto& h = c.assignment.host;

  UniquenessResult r;
  // Forced-layer reconstruction.  Labels in layer 0 have signature 0, which
  // pins every one of their edges to layer 0; labels in layer k-1 sit at the
  // maximum (k-1)(|e|-1), pinning them to layer k-1; interior labels have a
  // single edge whose signature equals its layer outright.
  bool all_forced = true;
  for (int e = 0; e < h.edge_count(); ++e) {
    int l = c.layers.layer[e];
    bool extremal = (l == 0 || l == c.k - 1);
    bool single_edge = h.edge(e).support.size() == 2;
    if (!extremal && !single_edge) all_forced = false;
  }
  LabelledMultigraph g = flatten(c.assignment);
  std::vector<int> reconstructed;
  for (const auto& ge : g.edges) reconstructed.push_back(c.layers.layer[ge.label_index]);
  r.forced = all_forced && reconstructed == c.decomposition.layer_of;
  r.detail = r.forced ? "every edge layer is forced by the certified signature"
                      : "some label escapes the extremal and single-edge forcing rules";

  if (g.edge_count() <= caps.max_graph_edges && c.k <= caps.max_k) {
    r.fiber_checked = true;
    SignatureVector target = signature(g, c.decomposition);
    FiberReport fr = fibers(g, c.k, caps);
    auto it = fr.fibers.find(target);
    r.fiber_singleton = it != fr.fibers.end() && it->second.size() == 1 &&
                        it->second.front().layer_of == c.decomposition.layer_of;
  }
  return r;
}

}  // namespace treepack
