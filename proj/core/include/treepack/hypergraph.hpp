#pragma once

#include <map>
#include <string>
#include <vector>

namespace treepack {

/// One labelled hyperedge occurrence.  Occurrences with equal supports but
/// different labels are distinct edges.
struct HyperedgeOccurrence {
  std::string label;
  std::vector<int> support;  // sorted distinct vertex ids, size >= 2
};

/// A finite labelled multihypergraph on vertices 0..t-1.  Vertex ids are
/// dense and carry unique display names; hyperedge labels are unique.
/// Supports of size < 2 and vertex counts < 2 are rejected at construction.
class LabelledMultihypergraph {
 public:
  LabelledMultihypergraph(std::vector<std::string> vertex_names,
                          std::vector<HyperedgeOccurrence> edges);

  int t() const { return static_cast<int>(vertex_names_.size()); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::string& vertex_name(int id) const;
  int vertex_id(const std::string& name) const;
  bool has_vertex(const std::string& name) const;

  int edge_count() const { return static_cast<int>(edges_.size()); }
  const HyperedgeOccurrence& edge(int index) const;
  const std::vector<HyperedgeOccurrence>& edges() const { return edges_; }
  int edge_index(const std::string& label) const;
  bool has_label(const std::string& label) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<HyperedgeOccurrence> edges_;
  std::map<std::string, int> vertex_index_;
  std::map<std::string, int> label_index_;
};

/// Total excess: the sum of |e|-1 over all hyperedge occurrences.  Equals
/// the weak partition excess at the discrete partition.
long long total_excess(const LabelledMultihypergraph& h);

}  // namespace treepack
