#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treepack/caps.hpp"
#include "treepack/decomposition.hpp"

namespace treepack {

/// Per-label layer choice, parallel to the host edge list; values in 0..k-1.
struct LayerMap {
  std::vector<int> layer;
};

/// A star-minimal tree assignment, an ordered k-tree decomposition of its
/// flattening, and a layer map placing each label wholly inside one layer,
/// with interior layers restricted to rank-two labels.
struct TwoSidedStarCertificate {
  TreeAssignment assignment;
  KTreeDecomposition decomposition;
  LayerMap layers;
  int k = 0;
};

struct CertificateDiagnostic {
  bool ok = false;
  std::string condition;  // first violated condition when !ok
  std::string message;
  bool star_minimal_required = true;
};

/// Checks, in order: shape, assignment validity, star-minimality (unless
/// relaxed), decomposition validity, layer containment, the interior
/// rank-two condition, and the per-layer edge accounting.  The relaxed mode
/// skips star-minimality only; it is flagged in the diagnostic.
CertificateDiagnostic verify_certificate(const TwoSidedStarCertificate& c,
                                         bool require_star_minimal = true);

/// One label class inside a tree layer: the support of the label and the
/// tree edges it contributes.
struct LabelClass {
  std::vector<int> support;
  std::vector<std::pair<int, int>> edges;
};

struct QuotientRankBound {
  int lhs = 0;        // graphic rank of the tree contracted by p, i.e. |P|-1
  long long rhs = 0;  // sum over classes of (incidence - 1)
  bool holds = false;
};

/// Both sides of the layer quotient rank bound lhs <= rhs.  The tree edges
/// must form a spanning tree of 0..t-1, the classes must partition them,
/// and every class edge must join vertices of its support; violations are
/// InputError.  The rank is computed by contracting the blocks of p and
/// discarding loops.
QuotientRankBound layer_quotient_rank_bound(int t,
                                            const std::vector<std::pair<int, int>>& tree_edges,
                                            const std::vector<LabelClass>& classes,
                                            const Partition& p);

struct CertifiedWpcEntry {
  Partition partition;
  std::vector<long long> layer_slack;  // per layer: rhs - (|P|-1)
  long long total_margin = 0;          // w_H(P) - k(|P|-1)
};

struct CertifiedWpcResult {
  bool holds = false;
  std::vector<CertifiedWpcEntry> ledger;
};

/// Runs the quotient-rank bound for every layer of every partition and
/// returns the full slack ledger.  Always true on a valid certificate.
CertifiedWpcResult certified_wpc(const TwoSidedStarCertificate& c, const Caps& caps = {},
                                 bool require_star_minimal = true);

struct UniquenessResult {
  /// The extremal-signature argument alone reconstructs the certified
  /// decomposition from its signature.
  bool forced = false;
  /// Whether the brute-force fiber cross-check ran (it is skipped, not an
  /// error, when the decomposition caps forbid it).
  bool fiber_checked = false;
  /// When checked: the certified signature's fiber is exactly the
  /// certified decomposition.
  bool fiber_singleton = false;
  std::string detail;
};

/// Re-derives signature uniqueness by forced layers, then cross-checks
/// against the enumerated fibers when within caps.
UniquenessResult certified_uniqueness(const TwoSidedStarCertificate& c, const Caps& caps = {},
                                      bool require_star_minimal = true);

}  // namespace treepack
