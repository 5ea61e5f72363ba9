#include "treepack/support_weights.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "treepack/errors.hpp"
#include "treepack/wpc.hpp"

namespace treepack {

namespace {

int family_size(const IndexFamily& f) { return static_cast<int>(f.sets.size()); }

void check_subset(const IndexFamily& f, const std::vector<int>& J) {
  if (J.empty()) throw InputError("subfamily must be nonempty");
  std::set<int> seen;
  for (int j : J) {
    if (j < 1 || j > family_size(f)) throw InputError("set index out of range");
    if (!seen.insert(j).second) throw InputError("repeated set index in subfamily");
  }
}

}  // namespace

IndexFamily make_index_family(int n, std::vector<std::vector<int>> sets) {
  if (n < 0) throw InputError("ground set size must be nonnegative");
  if (sets.size() < 2) throw InputError("index family needs at least two sets");
  for (auto& s : sets) {
    for (int x : s) {
      if (x < 1 || x > n) throw InputError("set element outside the ground set");
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return IndexFamily{n, std::move(sets)};
}

SupportHypergraphResult support_hypergraph(const IndexFamily& f) {
  const int t = family_size(f);
  std::vector<std::string> names;
  for (int j = 1; j <= t; ++j) names.push_back("I" + std::to_string(j));
  std::vector<HyperedgeOccurrence> edges;
  std::vector<int> dropped;
  for (int s = 1; s <= f.n; ++s) {
    std::vector<int> support;
    for (int j = 0; j < t; ++j) {
      if (std::binary_search(f.sets[j].begin(), f.sets[j].end(), s)) support.push_back(j);
    }
    if (support.size() >= 2) {
      edges.push_back({"e" + std::to_string(s), std::move(support)});
    } else {
      dropped.push_back(s);
    }
  }
  return SupportHypergraphResult{LabelledMultihypergraph(std::move(names), std::move(edges)),
                                 std::move(dropped)};
}

long long weight(const IndexFamily& f, const std::vector<int>& J) {
  check_subset(f, J);
  long long total = 0;
  std::set<int> uni;
  for (int j : J) {
    total += static_cast<long long>(f.sets[j - 1].size());
    uni.insert(f.sets[j - 1].begin(), f.sets[j - 1].end());
  }
  return total - static_cast<long long>(uni.size());
}

long long weight_support_form(const IndexFamily& f, const std::vector<int>& J) {
  check_subset(f, J);
  long long total = 0;
  for (int s = 1; s <= f.n; ++s) {
    int hits = 0;
    for (int j : J) {
      if (std::binary_search(f.sets[j - 1].begin(), f.sets[j - 1].end(), s)) ++hits;
    }
    if (hits > 1) total += hits - 1;
  }
  return total;
}

WeightConditionResult check_weight_conditions(const IndexFamily& f, int k, const Caps& caps) {
  if (k < 1) throw InputError("k must be positive");
  const int t = family_size(f);
  if (t > caps.max_weight_subset_vertices) {
    throw LimitError("family size exceeds the subset enumeration cap");
  }
  // Gray-code walk: one set enters or leaves per step, so the union size and
  // the size sum update in O(|I_j|).
  std::vector<int> cover(f.n + 1, 0);
  long long union_size = 0;
  long long size_sum = 0;
  unsigned prev = 0;
  const unsigned full = (1u << t) - 1;
  WeightConditionResult result;
  result.ok = true;
  auto consider = [&](unsigned mask, long long wt) {
    int members = __builtin_popcount(mask);
    bool bad = mask == full ? wt != static_cast<long long>(k) * (t - 1)
                            : wt > static_cast<long long>(k) * (members - 1);
    if (!bad) return;
    std::vector<int> J;
    for (int j = 0; j < t; ++j) {
      if (mask & (1u << j)) J.push_back(j + 1);
    }
    if (result.ok || J < *result.violating) result.violating = std::move(J);
    result.ok = false;
  };
  for (unsigned g = 1; g <= full; ++g) {
    unsigned cur = g ^ (g >> 1);
    unsigned flipped = cur ^ prev;
    int j = __builtin_ctz(flipped);
    bool entering = (cur & flipped) != 0;
    for (int x : f.sets[j]) {
      if (entering) {
        if (cover[x]++ == 0) ++union_size;
      } else {
        if (--cover[x] == 0) --union_size;
      }
    }
    size_sum += entering ? static_cast<long long>(f.sets[j].size())
                         : -static_cast<long long>(f.sets[j].size());
    prev = cur;
    consider(cur, size_sum - union_size);
  }
  return result;
}

WeightPartitionIdentity weight_partition_identity(const IndexFamily& f, int, const Partition& p) {
  const int t = family_size(f);
  if (p.size() != t) throw InputError("partition size does not match the family");
  SupportHypergraphResult sh = support_hypergraph(f);
  WeightPartitionIdentity r;
  r.lhs = weak_partition_excess(sh.hypergraph, p);
  long long rho = total_excess(sh.hypergraph);
  long long block_weights = 0;
  for (const auto& block : p.blocks()) {
    std::vector<int> J;
    for (int v : block) J.push_back(v + 1);
    block_weights += weight(f, J);
  }
  r.rhs = rho - block_weights;
  r.equal = r.lhs == r.rhs;
  return r;
}

RowsetSize full_rowset_size(const IndexFamily& f, int k) {
  if (k < 1) throw InputError("k must be positive");
  const int t = family_size(f);
  std::vector<int> all;
  for (int j = 1; j <= t; ++j) all.push_back(j);
  long long rho = total_excess(support_hypergraph(f).hypergraph);
  if (rho != weight(f, all) || rho != weight_support_form(f, all)) {
    throw std::logic_error("weight formulas disagree with the support hypergraph excess");
  }
  RowsetSize r;
  r.rho = rho;
  r.target = static_cast<long long>(k) * (t - 1);
  r.square = r.rho == r.target;
  return r;
}

SignatureVector monomial_exponents(const LabelledMultigraph& g, const KTreeDecomposition& d) {
  if (d.layer_of.size() != g.edges.size()) {
    throw InputError("layer map does not match the graph edge list");
  }
  // Count the (label, layer) intersection matrix first, then take the
  // weighted column sum; signature() accumulates edge by edge instead.
  std::vector<std::vector<long long>> count(g.labels.size(), std::vector<long long>(d.k, 0));
  for (std::size_t j = 0; j < g.edges.size(); ++j) {
    int l = d.layer_of[j];
    if (l < 0 || l >= d.k) throw InputError("layer index out of range");
    ++count[g.edges[j].label_index][l];
  }
  SignatureVector exps(g.labels.size(), 0);
  for (std::size_t e = 0; e < g.labels.size(); ++e) {
    long long v = 0;
    for (int i = 0; i < d.k; ++i) v += static_cast<long long>(i) * count[e][i];
    exps[e] = static_cast<int>(v);
  }
  return exps;
}

}  // namespace treepack
