#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treepack/caps.hpp"
#include "treepack/hypergraph.hpp"
#include "treepack/partition.hpp"

namespace treepack {

/// One labelled graph edge.  Several graph edges may carry the same label;
/// the slot index keeps them apart.
struct LabelledEdge {
  int u;
  int v;
  int label_index;  // into LabelledMultigraph::labels
  int slot;
};

/// Labelled multigraph on the ambient vertex set, typically the flattening
/// of a tree assignment.
struct LabelledMultigraph {
  std::vector<std::string> vertex_names;
  std::vector<std::string> labels;
  std::vector<LabelledEdge> edges;

  int t() const { return static_cast<int>(vertex_names.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

/// A choice, per hyperedge occurrence, of a tree on its support.  trees[i]
/// is the edge list of F_e for host edge i; slots number edges by their
/// position in that list.
struct TreeAssignment {
  LabelledMultihypergraph host;
  std::vector<std::vector<std::pair<int, int>>> trees;
};

/// Per-label star centers; center[i] must lie in the support of host edge i.
struct CenterMap {
  std::vector<int> center;
};

struct AssignmentDiagnostic {
  bool ok = false;
  std::string label;      // first offending label when !ok
  std::string condition;  // disconnected | cyclic | wrong vertex set | wrong edge count
  std::string message;
};

/// Confirms every F_e is a spanning tree of its support.  Never throws;
/// problems come back as a diagnostic naming the first offending label.
AssignmentDiagnostic validate_assignment(const TreeAssignment& a);

/// Merges the per-label trees into one labelled multigraph.  The edge count
/// of the result equals the total excess of the host.
LabelledMultigraph flatten(const TreeAssignment& a);

/// Assigns each hyperedge the star at its center; size-2 edges get their
/// unique edge regardless of the recorded center.
TreeAssignment star_assignment(const LabelledMultihypergraph& h, const CenterMap& centers);

/// The common endpoint when the tree is a star on the support, or nullopt.
/// For a 2-vertex support the smaller endpoint is reported.
std::optional<int> star_center_of(const std::vector<std::pair<int, int>>& tree,
                                  const std::vector<int>& support);

/// True when every hyperedge of size >= 3 is assigned a star (size-2 edges
/// are stars by definition).
bool is_star_minimal(const TreeAssignment& a);

/// Centers of a star-minimal assignment; InputError when some tree of a
/// size->=3 hyperedge is not a star.
CenterMap star_centers(const TreeAssignment& a);

/// Number of graph edges whose endpoints lie in distinct blocks.
long long crossing_count(const LabelledMultigraph& g, const Partition& p);
/// Same, restricted to edges of one label.
long long crossing_count(const LabelledMultigraph& g, const Partition& p, int label_index);

struct StarCrossing {
  int crossing;             // edges of the star leaving the center's block
  int incidence_minus_one;  // blocks meeting the support, minus one
  int lambda;               // crossing - incidence_minus_one, always >= 0
};

/// Crossing count of the star on `support` centered at `center`, split into
/// the incidence term and the nonnegative slack term.
StarCrossing star_crossing_decomposition(const std::vector<int>& support, int center,
                                         const Partition& p);

struct TightnessResult {
  bool tight = false;
  /// First violation in (label order, canonical partition order).
  std::optional<std::pair<std::string, Partition>> witness;
};

/// Whether cr_{F_e}(P) equals incidence-1 for every label and every
/// partition of the host vertex set.
TightnessResult is_partition_tight(const TreeAssignment& a, const Caps& caps = {});

/// Tree edges decoded from a Prufer sequence over `support` (sorted ids).
/// The sequence has length |support|-2 and its entries are support vertices.
std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& support,
                                               const std::vector<int>& seq);

/// All labelled trees on `support`, ordered by lexicographic Prufer
/// sequence.  Cayley: m^(m-2) trees for m = |support|.
std::vector<std::vector<std::pair<int, int>>> labelled_trees_on(const std::vector<int>& support);

/// Streams every tree assignment of h exactly once: per label all labelled
/// trees on the support, combined in label order with the first label
/// varying slowest.  The visitor returns false to stop; the function
/// returns true when the stream ran to completion.
bool enumerate_assignments(const LabelledMultihypergraph& h,
                           const std::function<bool(const TreeAssignment&)>& visit,
                           const Caps& caps = {});

/// Product of |e|^(|e|-2) over all hyperedges.
long long assignment_count(const LabelledMultihypergraph& h, const Caps& caps = {});

}  // namespace treepack
