#include "treepack/wpc.hpp"

#include <set>

#include "treepack/errors.hpp"

namespace treepack {

int partition_incidence(const LabelledMultihypergraph& h, const Partition& p, int edge_index) {
  if (p.size() != h.t()) throw InputError("partition size does not match hypergraph");
  std::set<int> blocks;
  for (int v : h.edge(edge_index).support) blocks.insert(p.block_of(v));
  return static_cast<int>(blocks.size());
}

int partition_incidence(const LabelledMultihypergraph& h, const Partition& p,
                        const std::string& label) {
  return partition_incidence(h, p, h.edge_index(label));
}

long long weak_partition_excess(const LabelledMultihypergraph& h, const Partition& p) {
  long long w = 0;
  for (int i = 0; i < h.edge_count(); ++i) w += partition_incidence(h, p, i) - 1;
  return w;
}

WpcResult is_k_wpc(const LabelledMultihypergraph& h, int k, const Caps& caps) {
  if (k < 1) throw InputError("k must be positive");
  if (h.t() > caps.max_partition_vertices) {
    throw LimitError("vertex count exceeds the partition enumeration cap");
  }
  WpcResult result;
  result.ok = true;
  // Full scan so the witness is deterministic: fewest blocks first, ties by
  // lexicographic restricted-growth string.  The enumerator is lex-ordered,
  // so a strict improvement test on block count keeps the lex-least one.
  for_each_partition(h.t(), [&](const Partition& p) {
    long long need = static_cast<long long>(k) * (p.num_blocks() - 1);
    if (weak_partition_excess(h, p) < need) {
      if (result.ok || p.num_blocks() < result.witness->num_blocks()) {
        result.witness = p;
      }
      result.ok = false;
    }
    return true;
  });
  return result;
}

bool is_k_critical(const LabelledMultihypergraph& h, int k) {
  if (k < 1) throw InputError("k must be positive");
  return total_excess(h) == static_cast<long long>(k) * (h.t() - 1);
}

}  // namespace treepack
