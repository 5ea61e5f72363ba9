#pragma once

#include <optional>
#include <string>

#include "treepack/caps.hpp"
#include "treepack/hypergraph.hpp"
#include "treepack/partition.hpp"

namespace treepack {

/// Number of blocks of p that meet the support of the given edge; >= 1.
int partition_incidence(const LabelledMultihypergraph& h, const Partition& p,
                        int edge_index);
int partition_incidence(const LabelledMultihypergraph& h, const Partition& p,
                        const std::string& label);

/// Weak partition excess: the sum over edges of (incidence - 1).
long long weak_partition_excess(const LabelledMultihypergraph& h, const Partition& p);

struct WpcResult {
  bool ok = false;
  /// On failure: a violating partition with the fewest blocks among all
  /// violators, ties broken by the lexicographically least
  /// restricted-growth string.
  std::optional<Partition> witness;
};

/// Exhaustively tests w_H(P) >= k(|P|-1) over every partition of the vertex
/// set.  Raises LimitError when t exceeds caps.max_partition_vertices.
WpcResult is_k_wpc(const LabelledMultihypergraph& h, int k, const Caps& caps = {});

/// Exact edge budget of k spanning trees: total excess equals k(t-1).
bool is_k_critical(const LabelledMultihypergraph& h, int k);

}  // namespace treepack
