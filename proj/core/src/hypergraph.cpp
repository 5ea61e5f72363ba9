#include "treepack/hypergraph.hpp"

#include <algorithm>

#include "treepack/errors.hpp"

namespace treepack {

LabelledMultihypergraph::LabelledMultihypergraph(std::vector<std::string> vertex_names,
                                                 std::vector<HyperedgeOccurrence> edges)
    : vertex_names_(std::move(vertex_names)), edges_(std::move(edges)) {
  const int t = static_cast<int>(vertex_names_.size());
  if (t < 2) throw InputError("hypergraph needs at least two vertices");
  for (int i = 0; i < t; ++i) {
    const std::string& n = vertex_names_[i];
    if (n.empty()) throw InputError("empty vertex name");
    if (!vertex_index_.emplace(n, i).second) throw InputError("duplicate vertex name: " + n);
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.label.empty()) throw InputError("empty hyperedge label");
    if (!label_index_.emplace(e.label, static_cast<int>(i)).second) {
      throw InputError("duplicate hyperedge label: " + e.label);
    }
    if (e.support.size() < 2) {
      throw InputError("hyperedge " + e.label + " has fewer than two vertices");
    }
    for (std::size_t j = 0; j < e.support.size(); ++j) {
      if (e.support[j] < 0 || e.support[j] >= t) {
        throw InputError("hyperedge " + e.label + " references a vertex out of range");
      }
      if (j > 0 && e.support[j] <= e.support[j - 1]) {
        throw InputError("hyperedge " + e.label + " support must be strictly increasing");
      }
    }
  }
}

const std::string& LabelledMultihypergraph::vertex_name(int id) const {
  if (id < 0 || id >= t()) throw InputError("vertex id out of range");
  return vertex_names_[id];
}

int LabelledMultihypergraph::vertex_id(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) throw InputError("unknown vertex name: " + name);
  return it->second;
}

bool LabelledMultihypergraph::has_vertex(const std::string& name) const {
  return vertex_index_.count(name) != 0;
}

const HyperedgeOccurrence& LabelledMultihypergraph::edge(int index) const {
  if (index < 0 || index >= edge_count()) throw InputError("edge index out of range");
  return edges_[index];
}

int LabelledMultihypergraph::edge_index(const std::string& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) throw InputError("unknown hyperedge label: " + label);
  return it->second;
}

bool LabelledMultihypergraph::has_label(const std::string& label) const {
  return label_index_.count(label) != 0;
}

long long total_excess(const LabelledMultihypergraph& h) {
  long long rho = 0;
  for (const auto& e : h.edges()) rho += static_cast<long long>(e.support.size()) - 1;
  return rho;
}

}  // namespace treepack
