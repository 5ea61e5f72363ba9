#pragma once

#include <optional>
#include <vector>

#include "treepack/caps.hpp"
#include "treepack/decomposition.hpp"
#include "treepack/hypergraph.hpp"
#include "treepack/partition.hpp"

namespace treepack {

/// Index sets I_1..I_t over the ground set {1..n}.  Vertex j-1 of the
/// support hypergraph stands for set j.
struct IndexFamily {
  int n = 0;
  std::vector<std::vector<int>> sets;  // 1-based elements, each within 1..n
};

/// Validates bounds and normalizes each set to sorted distinct elements.
IndexFamily make_index_family(int n, std::vector<std::vector<int>> sets);

struct SupportHypergraphResult {
  LabelledMultihypergraph hypergraph;
  /// Ground-set coordinates whose support had fewer than two members.
  /// Dropped coordinates contribute zero weight, so the weight calculus
  /// still reconciles.
  std::vector<int> dropped;
};

/// One edge occurrence per coordinate s with |{j : s in I_j}| >= 2,
/// labelled by s.
SupportHypergraphResult support_hypergraph(const IndexFamily& f);

/// wt(I_J) = sum |I_j| - |union I_j| over j in J (set-cardinality form).
/// J holds 1-based set indices and must be nonempty.
long long weight(const IndexFamily& f, const std::vector<int>& J);

/// The same weight computed as sum_s max(0, |e_s ∩ J| - 1); kept as an
/// independent route for the two-formula identity.
long long weight_support_form(const IndexFamily& f, const std::vector<int>& J);

struct WeightConditionResult {
  bool ok = false;
  /// Lexicographically least violating subfamily (1-based, ascending).
  std::optional<std::vector<int>> violating;
};

/// Checks wt(I_J) <= k(|J|-1) for every nonempty proper J and the equality
/// wt(I_[t]) = k(t-1).  Subsets are scanned in Gray-code order with
/// incremental union cardinalities.
WeightConditionResult check_weight_conditions(const IndexFamily& f, int k,
                                              const Caps& caps = {});

struct WeightPartitionIdentity {
  long long lhs = 0;    // w_H(p) on the support hypergraph
  long long rhs = 0;    // rho(H) - sum over blocks of wt(I_block)
  bool equal = false;
};

/// Both sides of the exact block-weight identity, computed independently.
/// rho(H) replaces k(t-1) so the identity holds with or without
/// criticality.
WeightPartitionIdentity weight_partition_identity(const IndexFamily& f, int k,
                                                  const Partition& p);

struct RowsetSize {
  long long rho = 0;
  long long target = 0;  // k(t-1)
  bool square = false;
};

/// rho of the support hypergraph against the k(t-1) row budget; rho is
/// cross-checked against wt(I_[t]) internally.
RowsetSize full_rowset_size(const IndexFamily& f, int k);

/// Per-label exponent vector of the monomial a decomposition contributes:
/// each graph edge adds its layer index to its label's entry.  Agrees with
/// signature(); the two are computed by different routes.
SignatureVector monomial_exponents(const LabelledMultigraph& g, const KTreeDecomposition& d);

}  // namespace treepack
