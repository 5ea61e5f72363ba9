#include "treepack/decomposition.hpp"

#include <algorithm>

#include "treepack/errors.hpp"
#include "treepack/union_find.hpp"

namespace treepack {

namespace {

DecompositionDiagnostic dfail(int layer, const std::string& condition,
                              const std::string& message) {
  DecompositionDiagnostic d;
  d.ok = false;
  d.layer = layer;
  d.condition = condition;
  d.message = message;
  return d;
}

void check_graph(const LabelledMultigraph& g) {
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.u >= g.t() || e.v < 0 || e.v >= g.t()) {
      throw InputError("graph edge endpoint out of range");
    }
  }
}

}  // namespace

DecompositionDiagnostic validate_decomposition(const LabelledMultigraph& g,
                                               const KTreeDecomposition& d) {
  const int t = g.t();
  const int m = g.edge_count();
  if (d.k < 1) return dfail(-1, "edge count", "layer count must be positive");
  if (static_cast<long long>(m) != static_cast<long long>(d.k) * (t - 1)) {
    return dfail(-1, "edge count",
                 std::to_string(m) + " edges cannot split into " + std::to_string(d.k) +
                     " spanning trees of " + std::to_string(t) + " vertices");
  }
  if (static_cast<int>(d.layer_of.size()) != m) {
    return dfail(-1, "wrong edge count", "layer map covers " + std::to_string(d.layer_of.size()) +
                                             " of " + std::to_string(m) + " edges");
  }
  for (int j = 0; j < m; ++j) {
    if (d.layer_of[j] < 0 || d.layer_of[j] >= d.k) {
      return dfail(d.layer_of[j], "layer out of range",
                   "edge " + std::to_string(j) + " is assigned layer " +
                       std::to_string(d.layer_of[j]));
    }
  }
  for (int i = 0; i < d.k; ++i) {
    UnionFind uf(t);
    for (int j = 0; j < m; ++j) {
      if (d.layer_of[j] != i) continue;
      const auto& e = g.edges[j];
      if (e.u == e.v || !uf.unite(e.u, e.v)) {
        return dfail(i, "cyclic", "edge " + std::to_string(j) + " closes a cycle in layer " +
                                      std::to_string(i));
      }
    }
    if (uf.components() > 1) {
      return dfail(i, "disconnected", "layer " + std::to_string(i) + " does not span");
    }
  }
  DecompositionDiagnostic ok;
  ok.ok = true;
  return ok;
}

SignatureVector signature(const LabelledMultigraph& g, const KTreeDecomposition& d) {
  if (d.layer_of.size() != g.edges.size()) {
    throw InputError("layer map does not match the graph edge list");
  }
  SignatureVector sig(g.labels.size(), 0);
  for (std::size_t j = 0; j < g.edges.size(); ++j) {
    if (d.layer_of[j] < 0 || d.layer_of[j] >= d.k) throw InputError("layer index out of range");
    sig[g.edges[j].label_index] += d.layer_of[j];
  }
  return sig;
}

SignatureVector signature(const TreeAssignment& a, const KTreeDecomposition& d) {
  return signature(flatten(a), d);
}

namespace {

class DecompositionEnumerator {
 public:
  DecompositionEnumerator(const LabelledMultigraph& g, int k,
                          const std::function<bool(const KTreeDecomposition&)>& visit)
      : g_(g), k_(k), t_(g.t()), m_(g.edge_count()), visit_(visit),
        layer_(m_, -1), count_(k, 0) {
    forests_.reserve(k);
    for (int i = 0; i < k; ++i) forests_.emplace_back(t_);
  }

  bool run() { return place(0); }

 private:
  bool feasible(int next) const {
    for (int i = 0; i < k_; ++i) {
      int needed = (t_ - 1) - count_[i];
      if (needed == 0) continue;
      int avail = 0;
      for (int j = next; j < m_ && avail < needed; ++j) {
        if (!forests_[i].same(g_.edges[j].u, g_.edges[j].v)) ++avail;
      }
      if (avail < needed) return false;
    }
    return true;
  }

  bool place(int j) {
    if (j == m_) {
      KTreeDecomposition d{k_, layer_};
      return visit_(d);
    }
    const auto& e = g_.edges[j];
    for (int i = 0; i < k_; ++i) {
      if (count_[i] == t_ - 1) continue;
      if (forests_[i].same(e.u, e.v)) continue;
      forests_[i].unite(e.u, e.v);
      ++count_[i];
      layer_[j] = i;
      bool keep_going = true;
      if (feasible(j + 1)) keep_going = place(j + 1);
      forests_[i].undo();
      --count_[i];
      layer_[j] = -1;
      if (!keep_going) return false;
    }
    return true;
  }

  const LabelledMultigraph& g_;
  int k_;
  int t_;
  int m_;
  const std::function<bool(const KTreeDecomposition&)>& visit_;
  std::vector<int> layer_;
  std::vector<int> count_;
  std::vector<RollbackUnionFind> forests_;
};

}  // namespace

bool enumerate_decompositions(const LabelledMultigraph& g, int k,
                              const std::function<bool(const KTreeDecomposition&)>& visit,
                              const Caps& caps) {
  if (k < 1) throw InputError("k must be positive");
  check_graph(g);
  const int t = g.t();
  if (t < 2) throw InputError("graph needs at least two vertices");
  if (static_cast<long long>(g.edge_count()) != static_cast<long long>(k) * (t - 1)) {
    return true;  // the edge budget rules out any decomposition
  }
  for (const auto& e : g.edges) {
    if (e.u == e.v) return true;  // a self-loop closes a cycle in every layer
  }
  if (k > caps.max_k) throw LimitError("k exceeds the layer cap");
  if (g.edge_count() > caps.max_graph_edges) {
    throw LimitError("edge count exceeds the decomposition enumeration cap");
  }
  DecompositionEnumerator en(g, k, visit);
  return en.run();
}

std::vector<KTreeDecomposition> all_decompositions(const LabelledMultigraph& g, int k,
                                                   const Caps& caps) {
  std::vector<KTreeDecomposition> out;
  enumerate_decompositions(g, k, [&](const KTreeDecomposition& d) {
    out.push_back(d);
    return true;
  }, caps);
  return out;
}

long long count_decompositions(const LabelledMultigraph& g, int k, const Caps& caps) {
  long long n = 0;
  enumerate_decompositions(g, k, [&](const KTreeDecomposition&) {
    ++n;
    return true;
  }, caps);
  return n;
}

FiberReport fibers(const LabelledMultigraph& g, int k, const Caps& caps) {
  FiberReport report;
  enumerate_decompositions(g, k, [&](const KTreeDecomposition& d) {
    report.fibers[signature(g, d)].push_back(d);
    ++report.total;
    return true;
  }, caps);
  return report;
}

GraphDistinguishability is_k_distinguishable_graph(const LabelledMultigraph& g, int k,
                                                   const Caps& caps) {
  GraphDistinguishability result;
  std::map<SignatureVector, long long> sizes;
  enumerate_decompositions(g, k, [&](const KTreeDecomposition& d) {
    ++sizes[signature(g, d)];
    ++result.decomposition_count;
    return true;
  }, caps);
  // Second pass: the witness is the first singleton-fiber decomposition in
  // enumeration order, found without holding the full list in memory.
  enumerate_decompositions(g, k, [&](const KTreeDecomposition& d) {
    SignatureVector sig = signature(g, d);
    if (sizes[sig] == 1) {
      result.distinguishable = true;
      result.witness = d;
      result.witness_signature = sig;
      return false;
    }
    return true;
  }, caps);
  return result;
}

AssignmentSearch has_k_distinguishable_assignment(const LabelledMultihypergraph& h, int k,
                                                  const Caps& caps) {
  if (k < 1) throw InputError("k must be positive");
  AssignmentSearch r;
  r.rho = total_excess(h);
  r.target = static_cast<long long>(k) * (h.t() - 1);
  if (r.rho != r.target) {
    r.excess_obstruction = true;
    return r;
  }
  enumerate_assignments(h, [&](const TreeAssignment& a) {
    ++r.assignments_tried;
    GraphDistinguishability gd = is_k_distinguishable_graph(flatten(a), k, caps);
    if (gd.distinguishable) {
      r.found = true;
      r.assignment = a;
      r.decomposition = gd.witness;
      return false;
    }
    return true;
  }, caps);
  return r;
}

}  // namespace treepack
