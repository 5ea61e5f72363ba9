#include "treepack/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "treepack/errors.hpp"

namespace treepack {

namespace {

using json = nlohmann::ordered_json;

void check_fields(const json& obj, const std::vector<std::string>& allowed,
                  const std::string& context) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw InputError("unknown field \"" + key + "\" in " + context);
    }
  }
}

const json& need(const json& obj, const std::string& key, const std::string& context) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError("missing field \"" + key + "\" in " + context);
  return *it;
}

std::string as_string(const json& v, const std::string& context) {
  if (!v.is_string()) throw InputError(context + " must be a string");
  return v.get<std::string>();
}

int as_int(const json& v, const std::string& context) {
  if (!v.is_number_integer()) throw InputError(context + " must be an integer");
  return v.get<int>();
}

LabelledMultihypergraph parse_hypergraph(const json& root) {
  const json& jv = need(root, "vertices", "instance document");
  if (!jv.is_array()) throw InputError("\"vertices\" must be an array");
  std::vector<std::string> names;
  for (const auto& v : jv) names.push_back(as_string(v, "vertex name"));

  std::map<std::string, int> ids;
  for (std::size_t i = 0; i < names.size(); ++i) ids[names[i]] = static_cast<int>(i);

  const json& je = need(root, "edges", "instance document");
  if (!je.is_array()) throw InputError("\"edges\" must be an array");
  std::vector<HyperedgeOccurrence> edges;
  for (const auto& e : je) {
    if (!e.is_object()) throw InputError("each edge must be an object");
    check_fields(e, {"label", "vertices"}, "edge");
    std::string label = as_string(need(e, "label", "edge"), "edge label");
    const json& sv = need(e, "vertices", "edge " + label);
    if (!sv.is_array()) throw InputError("edge " + label + " vertices must be an array");
    std::vector<int> support;
    for (const auto& v : sv) {
      std::string name = as_string(v, "edge " + label + " vertex");
      auto it = ids.find(name);
      if (it == ids.end()) throw InputError("edge " + label + " references unknown vertex " + name);
      support.push_back(it->second);
    }
    std::sort(support.begin(), support.end());
    for (std::size_t i = 1; i < support.size(); ++i) {
      if (support[i] == support[i - 1]) {
        throw InputError("edge " + label + " lists a vertex twice");
      }
    }
    edges.push_back({std::move(label), std::move(support)});
  }
  return LabelledMultihypergraph(std::move(names), std::move(edges));
}

int vertex_from(const LabelledMultihypergraph& h, const json& v, const std::string& context) {
  return h.vertex_id(as_string(v, context));
}

}  // namespace

TreeAssignment InstanceDocument::resolved_assignment() const {
  if (assignment_trees) return *assignment_trees;
  if (assignment_centers) return star_assignment(hypergraph, *assignment_centers);
  TreeAssignment a{hypergraph, {}};
  for (int i = 0; i < hypergraph.edge_count(); ++i) {
    const auto& s = hypergraph.edge(i).support;
    if (s.size() != 2) {
      throw InputError("document carries no assignment and " + hypergraph.edge(i).label +
                       " has rank above two");
    }
    a.trees.push_back({{s[0], s[1]}});
  }
  return a;
}

TwoSidedStarCertificate InstanceDocument::certificate() const {
  if (!decomposition) throw InputError("document carries no decomposition");
  if (!certificate_layers) throw InputError("document carries no certificate layer map");
  return TwoSidedStarCertificate{resolved_assignment(), *decomposition, *certificate_layers,
                                 decomposition->k};
}

InstanceDocument parse_instance(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw InputError("instance document must be a JSON object");
  check_fields(root, {"vertices", "edges", "assignment", "decomposition", "certificate"},
               "instance document");

  InstanceDocument doc{parse_hypergraph(root), std::nullopt, std::nullopt, std::nullopt,
                       std::nullopt};
  const auto& h = doc.hypergraph;

  if (auto it = root.find("assignment"); it != root.end()) {
    const json& ja = *it;
    if (!ja.is_object()) throw InputError("\"assignment\" must be an object");
    check_fields(ja, {"centers", "trees"}, "assignment");
    bool has_centers = ja.contains("centers");
    bool has_trees = ja.contains("trees");
    if (has_centers == has_trees) {
      throw InputError("assignment needs exactly one of \"centers\" and \"trees\"");
    }
    if (has_centers) {
      const json& jc = ja["centers"];
      if (!jc.is_object()) throw InputError("assignment centers must be an object");
      CenterMap centers;
      centers.center.assign(h.edge_count(), -1);
      for (const auto& [label, value] : jc.items()) {
        if (!h.has_label(label)) throw InputError("centers name unknown edge " + label);
        centers.center[h.edge_index(label)] = vertex_from(h, value, "center of " + label);
      }
      for (int i = 0; i < h.edge_count(); ++i) {
        if (centers.center[i] < 0) {
          throw InputError("centers missing edge " + h.edge(i).label);
        }
      }
      doc.assignment_centers = std::move(centers);
    } else {
      const json& jt = ja["trees"];
      if (!jt.is_object()) throw InputError("assignment trees must be an object");
      std::vector<std::vector<std::pair<int, int>>> trees(h.edge_count());
      std::vector<bool> seen(h.edge_count(), false);
      for (const auto& [label, value] : jt.items()) {
        if (!h.has_label(label)) throw InputError("trees name unknown edge " + label);
        int idx = h.edge_index(label);
        seen[idx] = true;
        if (!value.is_array()) throw InputError("tree of " + label + " must be an array");
        for (const auto& pair : value) {
          if (!pair.is_array() || pair.size() != 2) {
            throw InputError("tree edge of " + label + " must be a two-element array");
          }
          int u = vertex_from(h, pair[0], "tree edge of " + label);
          int v = vertex_from(h, pair[1], "tree edge of " + label);
          trees[idx].emplace_back(std::min(u, v), std::max(u, v));
        }
      }
      for (int i = 0; i < h.edge_count(); ++i) {
        if (!seen[i]) throw InputError("trees missing edge " + h.edge(i).label);
      }
      doc.assignment_trees = TreeAssignment{h, std::move(trees)};
    }
  }

  if (auto it = root.find("decomposition"); it != root.end()) {
    const json& jd = *it;
    if (!jd.is_object()) throw InputError("\"decomposition\" must be an object");
    check_fields(jd, {"k", "layers"}, "decomposition");
    KTreeDecomposition d;
    d.k = as_int(need(jd, "k", "decomposition"), "decomposition k");
    const json& jl = need(jd, "layers", "decomposition");
    if (!jl.is_object()) throw InputError("decomposition layers must be an object");
    std::vector<int> offset(h.edge_count() + 1, 0);
    for (int i = 0; i < h.edge_count(); ++i) {
      offset[i + 1] = offset[i] + static_cast<int>(h.edge(i).support.size()) - 1;
    }
    d.layer_of.assign(offset[h.edge_count()], -1);
    std::vector<bool> seen(d.layer_of.size(), false);
    for (const auto& [key, value] : jl.items()) {
      auto slash = key.rfind('/');
      if (slash == std::string::npos) {
        throw InputError("decomposition layer key \"" + key + "\" is not label/slot");
      }
      std::string label = key.substr(0, slash);
      int slot;
      try {
        slot = std::stoi(key.substr(slash + 1));
      } catch (const std::exception&) {
        throw InputError("decomposition layer key \"" + key + "\" has a malformed slot");
      }
      if (!h.has_label(label)) throw InputError("decomposition layers name unknown edge " + label);
      int idx = h.edge_index(label);
      int slots = static_cast<int>(h.edge(idx).support.size()) - 1;
      if (slot < 0 || slot >= slots) {
        throw InputError("decomposition layer key \"" + key + "\" slot out of range");
      }
      d.layer_of[offset[idx] + slot] = as_int(value, "layer of " + key);
      seen[offset[idx] + slot] = true;
    }
    for (int i = 0; i < h.edge_count(); ++i) {
      for (int s = 0; s + 1 < static_cast<int>(h.edge(i).support.size()); ++s) {
        if (!seen[offset[i] + s]) {
          throw InputError("decomposition layers missing " + h.edge(i).label + "/" +
                           std::to_string(s));
        }
      }
    }
    doc.decomposition = std::move(d);
  }

  if (auto it = root.find("certificate"); it != root.end()) {
    const json& jc = *it;
    if (!jc.is_object()) throw InputError("\"certificate\" must be an object");
    check_fields(jc, {"layer_map"}, "certificate");
    const json& jm = need(jc, "layer_map", "certificate");
    if (!jm.is_object()) throw InputError("certificate layer_map must be an object");
    LayerMap layers;
    layers.layer.assign(h.edge_count(), -1);
    std::vector<bool> seen(h.edge_count(), false);
    for (const auto& [label, value] : jm.items()) {
      if (!h.has_label(label)) throw InputError("layer_map names unknown edge " + label);
      int idx = h.edge_index(label);
      layers.layer[idx] = as_int(value, "layer of " + label);
      seen[idx] = true;
    }
    for (int i = 0; i < h.edge_count(); ++i) {
      if (!seen[i]) throw InputError("layer_map missing edge " + h.edge(i).label);
    }
    doc.certificate_layers = std::move(layers);
  }

  return doc;
}

InstanceDocument load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string write_instance(const InstanceDocument& doc) {
  const auto& h = doc.hypergraph;
  json root;
  root["vertices"] = h.vertex_names();
  json edges = json::array();
  for (const auto& e : h.edges()) {
    json je;
    je["label"] = e.label;
    json names = json::array();
    for (int v : e.support) names.push_back(h.vertex_name(v));
    je["vertices"] = std::move(names);
    edges.push_back(std::move(je));
  }
  root["edges"] = std::move(edges);

  if (doc.assignment_centers) {
    json centers;
    for (int i = 0; i < h.edge_count(); ++i) {
      centers[h.edge(i).label] = h.vertex_name(doc.assignment_centers->center[i]);
    }
    root["assignment"]["centers"] = std::move(centers);
  } else if (doc.assignment_trees) {
    json trees;
    for (int i = 0; i < h.edge_count(); ++i) {
      json list = json::array();
      for (const auto& [u, v] : doc.assignment_trees->trees[i]) {
        list.push_back(json::array({h.vertex_name(u), h.vertex_name(v)}));
      }
      trees[h.edge(i).label] = std::move(list);
    }
    root["assignment"]["trees"] = std::move(trees);
  }

  if (doc.decomposition) {
    json layers;
    int pos = 0;
    for (int i = 0; i < h.edge_count(); ++i) {
      for (int s = 0; s + 1 < static_cast<int>(h.edge(i).support.size()); ++s) {
        layers[h.edge(i).label + "/" + std::to_string(s)] = doc.decomposition->layer_of[pos++];
      }
    }
    root["decomposition"]["k"] = doc.decomposition->k;
    root["decomposition"]["layers"] = std::move(layers);
  }

  if (doc.certificate_layers) {
    json map;
    for (int i = 0; i < h.edge_count(); ++i) {
      map[h.edge(i).label] = doc.certificate_layers->layer[i];
    }
    root["certificate"]["layer_map"] = std::move(map);
  }

  return root.dump(2) + "\n";
}

InstanceDocument document_from(const LabelledMultihypergraph& h) {
  return InstanceDocument{h, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
}

InstanceDocument document_from(const CertifiedInstance& ci) {
  InstanceDocument doc{ci.hypergraph, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  doc.assignment_centers = star_centers(ci.certificate.assignment);
  doc.decomposition = ci.certificate.decomposition;
  doc.certificate_layers = ci.certificate.layers;
  return doc;
}

InstanceDocument document_from(const SumResult& sr) {
  InstanceDocument doc{sr.hypergraph, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  if (sr.certificate) {
    doc.assignment_centers = star_centers(sr.certificate->assignment);
    doc.decomposition = sr.certificate->decomposition;
    doc.certificate_layers = sr.certificate->layers;
  }
  return doc;
}

}  // namespace treepack
