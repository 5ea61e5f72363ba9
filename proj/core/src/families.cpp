#include "treepack/families.hpp"

#include <algorithm>
#include <set>

#include "treepack/errors.hpp"
#include "treepack/union_find.hpp"

namespace treepack {

namespace {

std::vector<int> full_support(int t) {
  std::vector<int> s(t);
  for (int i = 0; i < t; ++i) s[i] = i;
  return s;
}

void require_spanning_tree(const std::vector<std::pair<int, int>>& edges, int t,
                           const std::string& what) {
  if (static_cast<int>(edges.size()) != t - 1) {
    throw InputError(what + " must have exactly t-1 edges");
  }
  UnionFind uf(t);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= t || v < 0 || v >= t) throw InputError(what + " has an endpoint out of range");
    if (u == v || !uf.unite(u, v)) throw InputError(what + " contains a cycle");
  }
  if (uf.components() > 1) throw InputError(what + " does not span the vertex set");
}

bool same_hypergraph(const LabelledMultihypergraph& a, const LabelledMultihypergraph& b) {
  if (a.vertex_names() != b.vertex_names()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  for (int i = 0; i < a.edge_count(); ++i) {
    if (a.edge(i).label != b.edge(i).label || a.edge(i).support != b.edge(i).support)
      return false;
  }
  return true;
}

}  // namespace

LabelledMultihypergraph full_edge_bundle(int t, int k, int q) {
  if (t < 2) throw InputError("full_edge_bundle needs t >= 2");
  if (k < 1) throw InputError("full_edge_bundle needs k >= 1");
  if (q < 0) throw InputError("full_edge_bundle needs q >= 0");
  std::vector<std::string> names;
  for (int i = 1; i <= t; ++i) names.push_back("v" + std::to_string(i));
  std::vector<HyperedgeOccurrence> edges;
  for (int j = 1; j <= k + q; ++j) {
    edges.push_back({"e" + std::to_string(j), full_support(t)});
  }
  return LabelledMultihypergraph(std::move(names), std::move(edges));
}

LabelledMultihypergraph parallel_lines(int m) {
  if (m < 1) throw InputError("parallel_lines needs m >= 1");
  std::vector<HyperedgeOccurrence> edges;
  for (int j = 1; j <= m; ++j) edges.push_back({"e" + std::to_string(j), {0, 1}});
  return LabelledMultihypergraph({"x", "y"}, std::move(edges));
}

CertifiedInstance saturated_star_block(int t, int k, int center_minus, int center_plus,
                                       const std::vector<std::vector<std::pair<int, int>>>& middle_trees) {
  if (t < 2) throw InputError("saturated_star_block needs t >= 2");
  if (k < 2) throw InputError("saturated_star_block needs k >= 2");
  if (center_minus < 0 || center_minus >= t || center_plus < 0 || center_plus >= t) {
    throw InputError("star center out of range");
  }
  if (static_cast<int>(middle_trees.size()) != k - 2) {
    throw InputError("saturated_star_block needs exactly k-2 middle trees");
  }
  for (std::size_t i = 0; i < middle_trees.size(); ++i) {
    require_spanning_tree(middle_trees[i], t, "middle tree " + std::to_string(i + 1));
  }

  std::vector<std::string> names{"r"};
  for (int i = 1; i < t; ++i) names.push_back("u" + std::to_string(i));

  std::vector<HyperedgeOccurrence> hedges;
  hedges.push_back({"e-", full_support(t)});
  hedges.push_back({"e+", full_support(t)});
  for (int i = 1; i <= k - 2; ++i) {
    for (int j = 1; j <= t - 1; ++j) {
      const auto& [u, v] = middle_trees[i - 1][j - 1];
      hedges.push_back({"m" + std::to_string(i) + "e" + std::to_string(j),
                        {std::min(u, v), std::max(u, v)}});
    }
  }
  LabelledMultihypergraph h(std::move(names), std::move(hedges));

  CenterMap centers;
  centers.center.push_back(center_minus);
  centers.center.push_back(center_plus);
  for (int i = 2; i < h.edge_count(); ++i) centers.center.push_back(h.edge(i).support[0]);
  TreeAssignment a = star_assignment(h, centers);

  KTreeDecomposition d;
  d.k = k;
  LayerMap layers;
  layers.layer.push_back(0);
  layers.layer.push_back(k - 1);
  for (int i = 1; i <= k - 2; ++i) {
    for (int j = 1; j <= t - 1; ++j) layers.layer.push_back(i);
  }
  for (int e = 0; e < h.edge_count(); ++e) {
    for (std::size_t j = 0; j < a.trees[e].size(); ++j) d.layer_of.push_back(layers.layer[e]);
  }

  TwoSidedStarCertificate cert{a, d, layers, k};
  CertificateDiagnostic diag = verify_certificate(cert);
  if (!diag.ok) {
    throw std::logic_error("saturated_star_block produced an invalid certificate: " +
                           diag.condition);
  }
  return CertifiedInstance{h, cert};
}

CertifiedInstance nongraphic_triple_block() {
  LabelledMultihypergraph h({"r", "a", "b"},
                            {{"e-", {0, 1, 2}}, {"fa", {0, 1}}, {"fb", {0, 2}}});
  TreeAssignment a{h, {{{0, 1}, {0, 2}}, {{0, 1}}, {{0, 2}}}};
  KTreeDecomposition d{2, {0, 0, 1, 1}};
  LayerMap layers{{0, 1, 1}};
  TwoSidedStarCertificate cert{a, d, layers, 2};
  CertificateDiagnostic diag = verify_certificate(cert);
  if (!diag.ok) {
    throw std::logic_error("nongraphic_triple_block produced an invalid certificate");
  }
  return CertifiedInstance{h, cert};
}

SumResult one_vertex_sum(const LabelledMultihypergraph& h1, const std::string& r1,
                         const LabelledMultihypergraph& h2, const std::string& r2,
                         const std::optional<TwoSidedStarCertificate>& c1,
                         const std::optional<TwoSidedStarCertificate>& c2) {
  const int r1id = h1.vertex_id(r1);
  const int r2id = h2.vertex_id(r2);
  for (const auto& e : h2.edges()) {
    if (h1.has_label(e.label)) {
      throw InputError("hyperedge label " + e.label + " appears on both sides of the sum");
    }
  }

  std::vector<std::string> names = h1.vertex_names();
  std::set<std::string> used(names.begin(), names.end());
  std::vector<int> map2(h2.t(), -1);
  map2[r2id] = r1id;
  for (int j = 0; j < h2.t(); ++j) {
    if (j == r2id) continue;
    std::string n = h2.vertex_name(j);
    while (used.count(n)) n += "_2";
    used.insert(n);
    map2[j] = static_cast<int>(names.size());
    names.push_back(std::move(n));
  }

  std::vector<HyperedgeOccurrence> edges;
  for (const auto& e : h1.edges()) edges.push_back(e);
  for (const auto& e : h2.edges()) {
    std::vector<int> support;
    for (int v : e.support) support.push_back(map2[v]);
    std::sort(support.begin(), support.end());
    edges.push_back({e.label, std::move(support)});
  }
  LabelledMultihypergraph glued(std::move(names), std::move(edges));

  SumResult result{glued, std::nullopt};
  if (!c1 || !c2) return result;

  if (c1->k != c2->k) throw InputError("certificates carry different layer counts");
  if (!same_hypergraph(c1->assignment.host, h1) || !same_hypergraph(c2->assignment.host, h2)) {
    throw InputError("certificate host does not match the summand");
  }
  CertificateDiagnostic d1 = verify_certificate(*c1);
  CertificateDiagnostic d2 = verify_certificate(*c2);
  if (!d1.ok) throw InputError("side-1 certificate invalid: " + d1.condition);
  if (!d2.ok) throw InputError("side-2 certificate invalid: " + d2.condition);

  TreeAssignment a{glued, {}};
  for (const auto& tree : c1->assignment.trees) a.trees.push_back(tree);
  for (const auto& tree : c2->assignment.trees) {
    std::vector<std::pair<int, int>> mapped;
    for (const auto& [u, v] : tree) {
      mapped.emplace_back(std::min(map2[u], map2[v]), std::max(map2[u], map2[v]));
    }
    a.trees.push_back(std::move(mapped));
  }

  KTreeDecomposition d{c1->k, {}};
  for (int l : c1->decomposition.layer_of) d.layer_of.push_back(l);
  for (int l : c2->decomposition.layer_of) d.layer_of.push_back(l);

  LayerMap layers;
  for (int l : c1->layers.layer) layers.layer.push_back(l);
  for (int l : c2->layers.layer) layers.layer.push_back(l);

  TwoSidedStarCertificate cert{a, d, layers, c1->k};
  CertificateDiagnostic diag = verify_certificate(cert);
  if (!diag.ok) {
    throw std::logic_error("one_vertex_sum produced an invalid certificate: " + diag.condition);
  }
  result.certificate = cert;
  return result;
}

LabelledMultihypergraph subhypergraph_pruning_counterexample() {
  return LabelledMultihypergraph({"v1", "v2", "v3", "v4"},
                                 {{"e1", {0, 1, 2}}, {"e2", {0, 1, 3}}});
}

LabelledMultihypergraph relabelled(const LabelledMultihypergraph& h, const std::string& suffix) {
  std::vector<HyperedgeOccurrence> edges;
  for (const auto& e : h.edges()) edges.push_back({e.label + suffix, e.support});
  return LabelledMultihypergraph(h.vertex_names(), std::move(edges));
}

CertifiedInstance relabelled(const CertifiedInstance& ci, const std::string& suffix) {
  LabelledMultihypergraph h = relabelled(ci.hypergraph, suffix);
  TwoSidedStarCertificate cert = ci.certificate;
  cert.assignment.host = h;
  return CertifiedInstance{h, cert};
}

}  // namespace treepack
