#include "treepack/slack.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "treepack/errors.hpp"
#include "treepack/wpc.hpp"

namespace treepack {

namespace {

void require_valid_assignment(const TreeAssignment& a) {
  AssignmentDiagnostic d = validate_assignment(a);
  if (!d.ok) {
    throw InputError("invalid tree assignment (" + d.label + ": " + d.condition + ")");
  }
}

void require_valid_decomposition(const LabelledMultigraph& g, const KTreeDecomposition& d) {
  DecompositionDiagnostic dd = validate_decomposition(g, d);
  if (!dd.ok) throw InputError("invalid decomposition (" + dd.condition + ": " + dd.message + ")");
}

}  // namespace

std::vector<long long> assignment_slack_by_label(const TreeAssignment& a, const Partition& p) {
  require_valid_assignment(a);
  if (p.size() != a.host.t()) throw InputError("partition size does not match the host");
  std::vector<long long> out;
  for (int i = 0; i < a.host.edge_count(); ++i) {
    long long cr = 0;
    for (const auto& [u, v] : a.trees[i]) {
      if (p.block_of(u) != p.block_of(v)) ++cr;
    }
    std::set<int> blocks;
    for (int v : a.host.edge(i).support) blocks.insert(p.block_of(v));
    out.push_back(cr - (static_cast<long long>(blocks.size()) - 1));
  }
  return out;
}

long long assignment_slack(const TreeAssignment& a, const Partition& p) {
  long long total = 0;
  for (long long v : assignment_slack_by_label(a, p)) total += v;
  return total;
}

long long graphical_surplus(const LabelledMultigraph& g, const KTreeDecomposition& d,
                            const Partition& p) {
  require_valid_decomposition(g, d);
  if (p.size() != g.t()) throw InputError("partition size does not match the graph");
  long long crossings = 0;
  for (std::size_t j = 0; j < g.edges.size(); ++j) {
    if (p.block_of(g.edges[j].u) != p.block_of(g.edges[j].v)) ++crossings;
  }
  return crossings - static_cast<long long>(d.k) * (p.num_blocks() - 1);
}

SlackIdentity slack_identity_check(const TreeAssignment& a, const KTreeDecomposition& d,
                                   const Partition& p) {
  require_valid_assignment(a);
  LabelledMultigraph g = flatten(a);
  require_valid_decomposition(g, d);
  SlackIdentity r;
  r.lhs = weak_partition_excess(a.host, p) -
          static_cast<long long>(d.k) * (p.num_blocks() - 1);
  r.rhs = graphical_surplus(g, d, p) - assignment_slack(a, p);
  r.equal = r.lhs == r.rhs;
  return r;
}

long long star_lambda_closed_form(const TreeAssignment& a, const CenterMap& centers,
                                  const Partition& p) {
  require_valid_assignment(a);
  if (p.size() != a.host.t()) throw InputError("partition size does not match the host");
  if (static_cast<int>(centers.center.size()) != a.host.edge_count()) {
    throw InputError("center map size does not match hyperedge count");
  }
  TreeAssignment stars = star_assignment(a.host, centers);
  for (int i = 0; i < a.host.edge_count(); ++i) {
    std::multiset<std::pair<int, int>> lhs, rhs;
    for (auto [u, v] : a.trees[i]) lhs.insert({std::min(u, v), std::max(u, v)});
    for (auto [u, v] : stars.trees[i]) rhs.insert({std::min(u, v), std::max(u, v)});
    if (lhs != rhs) {
      throw InputError("tree of " + a.host.edge(i).label +
                       " is not the star of its recorded center");
    }
  }
  long long total = 0;
  for (int i = 0; i < a.host.edge_count(); ++i) {
    const auto& support = a.host.edge(i).support;
    int cb = p.block_of(centers.center[i]);
    std::map<int, int> per_block;
    for (int v : support) ++per_block[p.block_of(v)];
    for (const auto& [block, members] : per_block) {
      if (block != cb && members > 1) total += members - 1;
    }
  }
  return total;
}

FiniteSystemResult finite_system_check(const TreeAssignment& a, const KTreeDecomposition& d,
                                       int k, const Caps& caps) {
  require_valid_assignment(a);
  LabelledMultigraph g = flatten(a);
  require_valid_decomposition(g, d);
  if (k != d.k) throw InputError("k does not match the decomposition layer count");
  const int t = a.host.t();
  if (t > caps.max_partition_vertices) {
    throw LimitError("vertex count exceeds the partition enumeration cap");
  }
  FiniteSystemResult result;
  result.ok = true;
  for_each_partition(t, [&](const Partition& p) {
    if (assignment_slack(a, p) > graphical_surplus(g, d, p)) {
      result.ok = false;
      result.violating = p;
      return false;
    }
    return true;
  });
  WpcResult wpc = is_k_wpc(a.host, k, caps);
  if (wpc.ok != result.ok) {
    throw std::logic_error("slack system verdict disagrees with weak partition connectivity");
  }
  return result;
}

}  // namespace treepack
