#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "treepack/decomposition.hpp"
#include "treepack/errors.hpp"
#include "treepack/families.hpp"

using treepack::CenterMap;
using treepack::KTreeDecomposition;
using treepack::LabelledMultigraph;
using treepack::LabelledMultihypergraph;
using treepack::TreeAssignment;

namespace {

TreeAssignment nongraphic_assignment() {
  LabelledMultihypergraph h{{"r", "a", "b"},
                            {{"e-", {0, 1, 2}}, {"fa", {0, 1}}, {"fb", {0, 2}}}};
  return treepack::star_assignment(h, CenterMap{{0, 0, 0}});
}

LabelledMultigraph cycle_graph(int t) {
  LabelledMultigraph g;
  for (int i = 0; i < t; ++i) g.vertex_names.push_back("v" + std::to_string(i));
  for (int i = 0; i < t; ++i) {
    g.labels.push_back("c" + std::to_string(i));
    g.edges.push_back({i, (i + 1) % t, i, 0});
  }
  return g;
}

}  // namespace

TEST_CASE("decomposition validation diagnostics in order") {
  auto g = treepack::flatten(nongraphic_assignment());

  KTreeDecomposition wrong_k{3, {0, 0, 1, 1}};
  auto d = treepack::validate_decomposition(g, wrong_k);
  CHECK(!d.ok);
  CHECK(d.layer == -1);
  CHECK(d.condition == "edge count");

  KTreeDecomposition short_map{2, {0, 0, 1}};
  d = treepack::validate_decomposition(g, short_map);
  CHECK(!d.ok);
  CHECK(d.condition == "wrong edge count");

  KTreeDecomposition out_of_range{2, {0, 0, 1, 2}};
  d = treepack::validate_decomposition(g, out_of_range);
  CHECK(!d.ok);
  CHECK(d.condition == "layer out of range");

  KTreeDecomposition cyclic{2, {0, 1, 0, 1}};
  // layer 0 = {e- first edge ra, fa edge ra}: a repeated edge
  d = treepack::validate_decomposition(g, cyclic);
  CHECK(!d.ok);
  CHECK(d.condition == "cyclic");
  CHECK(d.layer == 0);

  KTreeDecomposition good{2, {0, 0, 1, 1}};
  CHECK(treepack::validate_decomposition(g, good).ok);
}

TEST_CASE("disconnected layers are reported when acyclic but short") {
  // two spanning trees of a path plus two parallel copies: putting both
  // copies of one edge in one layer starves the other layer
  LabelledMultigraph g;
  g.vertex_names = {"a", "b", "c"};
  g.labels = {"p", "q", "r", "s"};
  g.edges = {{0, 1, 0, 0}, {1, 2, 1, 0}, {0, 1, 2, 0}, {1, 2, 3, 0}};
  KTreeDecomposition paired{2, {0, 0, 1, 1}};
  CHECK(treepack::validate_decomposition(g, paired).ok);
  // an undersized layer 0 is reported as disconnected before the matching
  // oversized layer 1 would be caught as cyclic
  KTreeDecomposition starved{2, {0, 1, 1, 1}};
  auto d = treepack::validate_decomposition(g, starved);
  CHECK(!d.ok);
  CHECK(d.condition == "disconnected");
  CHECK(d.layer == 0);
}

TEST_CASE("signatures weight layer membership by index") {
  auto a = nongraphic_assignment();
  auto g = treepack::flatten(a);
  KTreeDecomposition certified{2, {0, 0, 1, 1}};
  CHECK(treepack::signature(g, certified) == treepack::SignatureVector{0, 1, 1});
  KTreeDecomposition swapped{2, {1, 1, 0, 0}};
  CHECK(treepack::signature(g, swapped) == treepack::SignatureVector{2, 0, 0});
  CHECK(treepack::signature(a, certified) == treepack::SignatureVector{0, 1, 1});

  KTreeDecomposition bad{2, {0, 0, 1}};
  CHECK_THROWS_AS(treepack::signature(g, bad), treepack::InputError);
  KTreeDecomposition negative{2, {0, 0, -1, 1}};
  CHECK_THROWS_AS(treepack::signature(g, negative), treepack::InputError);
}

TEST_CASE("enumeration matches the no-pruning oracle") {
  auto g = treepack::flatten(nongraphic_assignment());
  for (int k = 1; k <= 2; ++k) {
    auto mine = treepack::all_decompositions(g, k);
    auto expected = oracles::all_decompositions(g, k);
    REQUIRE(mine.size() == expected.size());
    std::set<std::vector<int>> seen;
    for (const auto& d : mine) seen.insert(d.layer_of);
    for (const auto& e : expected) CHECK(seen.count(e) == 1);
  }
  CHECK(treepack::count_decompositions(g, 2) == 4);

  auto c4 = cycle_graph(4);
  // a 4-cycle has four edges but is not two spanning trees
  CHECK(treepack::count_decompositions(c4, 1) == 0);
  auto k2 = oracles::all_decompositions(c4, 1);
  CHECK(k2.empty());
}

TEST_CASE("enumeration order is lexicographic on layer vectors") {
  auto g = treepack::flatten(nongraphic_assignment());
  auto all = treepack::all_decompositions(g, 2);
  REQUIRE(all.size() == 4);
  std::vector<std::vector<int>> vecs;
  for (const auto& d : all) vecs.push_back(d.layer_of);
  CHECK(std::is_sorted(vecs.begin(), vecs.end()));
  CHECK(vecs.front() == std::vector<int>{0, 0, 1, 1});
  CHECK(vecs.back() == std::vector<int>{1, 1, 0, 0});
}

TEST_CASE("budget mismatch yields the empty stream before cap checks") {
  // 18 parallel edges exceed the edge cap, but the budget test runs first
  LabelledMultigraph g;
  g.vertex_names = {"a", "b"};
  for (int i = 0; i < 18; ++i) {
    g.labels.push_back("e" + std::to_string(i));
    g.edges.push_back({0, 1, i, 0});
  }
  bool complete = treepack::enumerate_decompositions(g, 3, [](const KTreeDecomposition&) {
    return false;
  });
  CHECK(complete);
  CHECK(treepack::count_decompositions(g, 3) == 0);
  // with a matching budget the cap applies
  CHECK_THROWS_AS(treepack::count_decompositions(g, 18), treepack::LimitError);
}

TEST_CASE("self loops admit no decomposition") {
  LabelledMultigraph g;
  g.vertex_names = {"a", "b"};
  g.labels = {"e", "f"};
  g.edges = {{0, 0, 0, 0}, {0, 1, 1, 0}};
  CHECK(treepack::count_decompositions(g, 2) == 0);
}

TEST_CASE("fiber report groups decompositions by signature") {
  auto g = treepack::flatten(nongraphic_assignment());
  auto fr = treepack::fibers(g, 2);
  CHECK(fr.total == 4);
  CHECK(fr.fibers.size() == 4);
  for (const auto& [sig, members] : fr.fibers) CHECK(members.size() == 1);
  treepack::SignatureVector certified{0, 1, 1};
  REQUIRE(fr.fibers.count(certified) == 1);
  CHECK(fr.fibers.at(certified)[0].layer_of == std::vector<int>{0, 0, 1, 1});

  // two labels over parallel edges: swapping layers permutes signatures
  LabelledMultigraph lines;
  lines.vertex_names = {"x", "y"};
  lines.labels = {"e1", "e2"};
  lines.edges = {{0, 1, 0, 0}, {0, 1, 1, 0}};
  auto fr2 = treepack::fibers(lines, 2);
  CHECK(fr2.total == 2);
  CHECK(fr2.fibers.size() == 2);
}

TEST_CASE("graph distinguishability returns the first singleton witness") {
  auto g = treepack::flatten(nongraphic_assignment());
  auto r = treepack::is_k_distinguishable_graph(g, 2);
  CHECK(r.distinguishable);
  CHECK(r.decomposition_count == 4);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->layer_of == std::vector<int>{0, 0, 1, 1});
  REQUIRE(r.witness_signature.has_value());
  CHECK(*r.witness_signature == treepack::SignatureVector{0, 1, 1});
}

TEST_CASE("single-label parallel edges are never distinguishable past k=1") {
  // both orderings of the two layers give the same signature
  LabelledMultigraph g;
  g.vertex_names = {"x", "y"};
  g.labels = {"e"};
  g.edges = {{0, 1, 0, 0}, {0, 1, 0, 1}};
  auto r = treepack::is_k_distinguishable_graph(g, 2);
  CHECK(r.decomposition_count == 2);
  CHECK(!r.distinguishable);
  CHECK(!r.witness.has_value());
}

TEST_CASE("assignment search short-circuits on the excess obstruction") {
  auto bundle = treepack::full_edge_bundle(2, 1, 1);
  auto r = treepack::has_k_distinguishable_assignment(bundle, 1);
  CHECK(!r.found);
  CHECK(r.excess_obstruction);
  CHECK(r.rho == 2);
  CHECK(r.target == 1);
  CHECK(r.assignments_tried == 0);
}

TEST_CASE("assignment search finds the nongraphic certificate instance") {
  LabelledMultihypergraph h{{"r", "a", "b"},
                            {{"e-", {0, 1, 2}}, {"fa", {0, 1}}, {"fb", {0, 2}}}};
  auto r = treepack::has_k_distinguishable_assignment(h, 2);
  CHECK(r.found);
  CHECK(!r.excess_obstruction);
  CHECK(r.rho == 4);
  CHECK(r.target == 4);
  CHECK(r.assignments_tried >= 1);
  REQUIRE(r.assignment.has_value());
  REQUIRE(r.decomposition.has_value());
  auto g = treepack::flatten(*r.assignment);
  CHECK(treepack::validate_decomposition(g, *r.decomposition).ok);
}
