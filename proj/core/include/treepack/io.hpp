#pragma once

#include <optional>
#include <string>

#include "treepack/certificate.hpp"
#include "treepack/families.hpp"

namespace treepack {

inline constexpr const char* kLibraryVersion = "0.1.0";

/// JSON instance document: vertices, labelled edges, and optionally an
/// assignment (centers or explicit trees), a decomposition, and a
/// certificate layer map.  Parsing rejects unknown fields by name and the
/// writer emits a canonical form, so write(parse(write(x))) is
/// byte-identical to write(x).
struct InstanceDocument {
  LabelledMultihypergraph hypergraph;
  std::optional<CenterMap> assignment_centers;     // "assignment": {"centers": ...}
  std::optional<TreeAssignment> assignment_trees;  // "assignment": {"trees": ...}
  std::optional<KTreeDecomposition> decomposition;
  std::optional<LayerMap> certificate_layers;

  bool has_assignment() const { return assignment_centers || assignment_trees; }

  /// The assignment in tree form: explicit trees as given, centers expanded
  /// to stars, or the identity assignment when every edge has rank two.
  /// InputError otherwise.
  TreeAssignment resolved_assignment() const;

  /// All of assignment + decomposition + layer map, or InputError.
  TwoSidedStarCertificate certificate() const;
};

InstanceDocument parse_instance(const std::string& json_text);
InstanceDocument load_instance(const std::string& path);
std::string write_instance(const InstanceDocument& doc);

InstanceDocument document_from(const LabelledMultihypergraph& h);
InstanceDocument document_from(const CertifiedInstance& ci);
InstanceDocument document_from(const SumResult& sr);

}  // namespace treepack
