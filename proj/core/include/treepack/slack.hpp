#pragma once

#include <optional>
#include <vector>

#include "treepack/assignment.hpp"
#include "treepack/caps.hpp"
#include "treepack/decomposition.hpp"

namespace treepack {

/// Per-label slack cr_{F_e}(P) - (incidence - 1); each entry >= 0.
std::vector<long long> assignment_slack_by_label(const TreeAssignment& a, const Partition& p);

/// Total assignment slack Lambda_F(P); zero at the discrete partition.
long long assignment_slack(const TreeAssignment& a, const Partition& p);

/// Graphical partition surplus: total tree crossings minus k(|P|-1).
long long graphical_surplus(const LabelledMultigraph& g, const KTreeDecomposition& d,
                            const Partition& p);

struct SlackIdentity {
  long long lhs = 0;  // w_H(P) - k(|P|-1), hypergraph route
  long long rhs = 0;  // surplus - slack, graph route
  bool equal = false;
};

/// Both sides of the exact slack identity, computed by structurally
/// independent paths.  Equal on every valid input.
SlackIdentity slack_identity_check(const TreeAssignment& a, const KTreeDecomposition& d,
                                   const Partition& p);

/// Closed-form slack of a star assignment from supports and centers alone;
/// InputError when a tree is not the star of its recorded center.
long long star_lambda_closed_form(const TreeAssignment& a, const CenterMap& centers,
                                  const Partition& p);

struct FiniteSystemResult {
  bool ok = false;
  std::optional<Partition> violating;  // first in canonical order
};

/// Checks Lambda <= surplus over every partition for a star assignment and
/// a fixed decomposition; the verdict is cross-asserted against is_k_wpc
/// on the host.
FiniteSystemResult finite_system_check(const TreeAssignment& a, const KTreeDecomposition& d,
                                       int k, const Caps& caps = {});

}  // namespace treepack
