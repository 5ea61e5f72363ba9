#pragma once

namespace treepack {

/// Hard limits for the exhaustive loops.  Every limit is configurable and
/// exceeding one raises LimitError.
struct Caps {
  /// Partition scans enumerate Bell(t) partitions; Bell(12) is about 4.2e6.
  int max_partition_vertices = 12;
  /// Tree enumeration per hyperedge is Cayley's m^(m-2); 6^4 = 1296.
  int max_support_size = 6;
  /// Upper bound on labelled graph edges for decomposition enumeration.
  int max_graph_edges = 16;
  /// Upper bound on the number of tree layers for exhaustive runs.
  int max_k = 4;
  /// Weight-condition checks enumerate 2^t subfamilies.
  int max_weight_subset_vertices = 20;
};

}  // namespace treepack
