#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treepack/certificate.hpp"
#include "treepack/hypergraph.hpp"

namespace treepack {

/// k+q parallel copies of the full hyperedge on t vertices (labels e1..).
/// q = 0 gives the critical bundle.
LabelledMultihypergraph full_edge_bundle(int t, int k, int q);

/// m labelled copies of the rank-two edge {x,y}.
LabelledMultihypergraph parallel_lines(int m);

struct CertifiedInstance {
  LabelledMultihypergraph hypergraph;
  TwoSidedStarCertificate certificate;
};

/// Two full hyperedges realized as stars in the extremal layers plus k-2
/// caller-supplied middle spanning trees given as rank-two labels.  The
/// middle list must be empty for k = 2.  Vertices are named r, u1..u{t-1};
/// centers are vertex ids.  The returned certificate verifies.
CertifiedInstance saturated_star_block(int t, int k, int center_minus, int center_plus,
                                       const std::vector<std::vector<std::pair<int, int>>>& middle_trees);

/// The fixed 3-vertex instance with one triple edge and two rank-two edges,
/// certified at k = 2.
CertifiedInstance nongraphic_triple_block();

struct SumResult {
  LabelledMultihypergraph hypergraph;
  std::optional<TwoSidedStarCertificate> certificate;
};

/// Glues two hypergraphs at one shared vertex (r1 on side 1 identified with
/// r2 on side 2).  Side-1 vertices come first, then side-2 vertices minus
/// r2; clashing side-2 names get a "_2" suffix.  Labels must be disjoint.
/// When both certificates are given with equal k, the glued certificate is
/// built layer by layer and verified before being returned.
SumResult one_vertex_sum(const LabelledMultihypergraph& h1, const std::string& r1,
                         const LabelledMultihypergraph& h2, const std::string& r2,
                         const std::optional<TwoSidedStarCertificate>& c1 = std::nullopt,
                         const std::optional<TwoSidedStarCertificate>& c2 = std::nullopt);

/// The 4-vertex, 2-edge instance whose every edge subset misses the exact
/// excess k(t-1) = 3 at k = 1.
LabelledMultihypergraph subhypergraph_pruning_counterexample();

/// Copies with every hyperedge label suffixed, leaving vertices and all
/// certificate structure untouched.  Sums need disjoint label sets, so
/// gluing two copies of one block goes through a relabelled copy.
LabelledMultihypergraph relabelled(const LabelledMultihypergraph& h, const std::string& suffix);
CertifiedInstance relabelled(const CertifiedInstance& ci, const std::string& suffix);

}  // namespace treepack
