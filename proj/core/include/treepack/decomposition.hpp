#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treepack/assignment.hpp"
#include "treepack/caps.hpp"

namespace treepack {

/// An ordered partition of a labelled multigraph's edges into k spanning
/// trees, stored as the layer index of each graph edge (parallel to the
/// graph's edge list).
struct KTreeDecomposition {
  int k = 0;
  std::vector<int> layer_of;
};

/// Per-label weighted layer counts, indexed in host label order.
using SignatureVector = std::vector<int>;

struct DecompositionDiagnostic {
  bool ok = false;
  int layer = -1;         // first failing layer, or -1 for global failures
  std::string condition;  // edge count | layer out of range | wrong edge count | cyclic | disconnected
  std::string message;
};

/// Checks |E| == k(t-1) and that each layer is a spanning tree of the full
/// vertex set.  Never throws.
DecompositionDiagnostic validate_decomposition(const LabelledMultigraph& g,
                                               const KTreeDecomposition& d);

/// sig(e) = sum over layers i of i * |T_i ∩ F_e|.
SignatureVector signature(const LabelledMultigraph& g, const KTreeDecomposition& d);
SignatureVector signature(const TreeAssignment& a, const KTreeDecomposition& d);

/// Streams every ordered k-tree decomposition of g exactly once, in
/// lexicographic order of the layer vector.  The stream is empty when
/// |E| != k(t-1).  Backtracking prunes cyclic layers and layers that can no
/// longer be connected by the remaining undecided edges.
bool enumerate_decompositions(const LabelledMultigraph& g, int k,
                              const std::function<bool(const KTreeDecomposition&)>& visit,
                              const Caps& caps = {});

std::vector<KTreeDecomposition> all_decompositions(const LabelledMultigraph& g, int k,
                                                   const Caps& caps = {});
long long count_decompositions(const LabelledMultigraph& g, int k, const Caps& caps = {});

/// All decompositions grouped by signature.  Fibers partition the full
/// decomposition set.
struct FiberReport {
  std::map<SignatureVector, std::vector<KTreeDecomposition>> fibers;
  long long total = 0;
};

FiberReport fibers(const LabelledMultigraph& g, int k, const Caps& caps = {});

struct GraphDistinguishability {
  bool distinguishable = false;
  /// The singleton-fiber decomposition minimal in enumeration order.
  std::optional<KTreeDecomposition> witness;
  std::optional<SignatureVector> witness_signature;
  long long decomposition_count = 0;
};

/// Whether some decomposition of g is the unique one with its signature.
GraphDistinguishability is_k_distinguishable_graph(const LabelledMultigraph& g, int k,
                                                   const Caps& caps = {});

struct AssignmentSearch {
  bool found = false;
  /// True when the search never ran because total excess != k(t-1); no
  /// tree assignment can then admit any k-tree decomposition.
  bool excess_obstruction = false;
  long long rho = 0;
  long long target = 0;  // k(t-1)
  long long assignments_tried = 0;
  std::optional<TreeAssignment> assignment;
  std::optional<KTreeDecomposition> decomposition;
};

/// Searches enumerate_assignments for one whose flattening is
/// k-distinguishable, returning the first hit in enumeration order.
AssignmentSearch has_k_distinguishable_assignment(const LabelledMultihypergraph& h, int k,
                                                  const Caps& caps = {});

}  // namespace treepack
