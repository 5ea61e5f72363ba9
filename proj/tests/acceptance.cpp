// Acceptance suite: twelve exact criteria, one line each.  Every numeric
// expectation is either checked against an independent brute-force oracle
// from oracles.hpp or asserted as a frozen literal.
#include <algorithm>
#include <cstdio>
#include <exception>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "treepack/certificate.hpp"
#include "treepack/decomposition.hpp"
#include "treepack/errors.hpp"
#include "treepack/families.hpp"
#include "treepack/io.hpp"
#include "treepack/partition.hpp"
#include "treepack/slack.hpp"
#include "treepack/support_weights.hpp"
#include "treepack/wpc.hpp"

using namespace treepack;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("criterion %2d  %-56s %s%s%s\n", number, name.c_str(), ok ? "pass" : "FAIL",
              detail.empty() ? "" : "  ", detail.c_str());
  if (!ok) ++failures;
}

template <typename F>
void criterion(int number, const std::string& name, F&& body) {
  try {
    std::string detail;
    bool ok = body(detail);
    report(number, name, ok, detail);
  } catch (const std::exception& e) {
    report(number, name, false, std::string("exception: ") + e.what());
  }
}

bool check(bool& ok, bool condition) {
  ok = ok && condition;
  return condition;
}

/// Certified pool shared by criteria 5 and 6.
std::vector<CertifiedInstance> certified_pool() {
  std::vector<CertifiedInstance> pool;
  std::vector<std::vector<std::pair<int, int>>> no_middles;
  for (int t = 2; t <= 4; ++t) {
    // center variants: both at the hub, split, both at the last vertex
    pool.push_back(saturated_star_block(t, 2, 0, 0, no_middles));
    pool.push_back(saturated_star_block(t, 2, 0, t - 1, no_middles));
    if (t >= 3) pool.push_back(saturated_star_block(t, 2, 1, t - 1, no_middles));

    // k = 3 takes one middle spanning tree; use the hub star and, when the
    // block is large enough, a path as a non-star middle
    std::vector<std::pair<int, int>> star_middle;
    for (int v = 1; v < t; ++v) star_middle.emplace_back(0, v);
    pool.push_back(saturated_star_block(t, 3, 0, 0, {star_middle}));
    if (t >= 3) {
      std::vector<std::pair<int, int>> path_middle;
      for (int v = 0; v + 1 < t; ++v) path_middle.emplace_back(v, v + 1);
      pool.push_back(saturated_star_block(t, 3, t - 1, 1, {path_middle}));
    }
  }
  pool.push_back(nongraphic_triple_block());

  // all equal-k sums of the base blocks with glued size at most 6
  const std::size_t base = pool.size();
  int counter = 0;
  for (std::size_t i = 0; i < base; ++i) {
    for (std::size_t j = i; j < base; ++j) {
      const auto& a = pool[i];
      const auto& b = pool[j];
      if (a.certificate.k != b.certificate.k) continue;
      if (a.hypergraph.t() + b.hypergraph.t() - 1 > 6) continue;
      auto left = relabelled(a, "L" + std::to_string(counter));
      auto right = relabelled(b, "R" + std::to_string(counter));
      ++counter;
      auto s = one_vertex_sum(left.hypergraph, left.hypergraph.vertex_name(0),
                              right.hypergraph, right.hypergraph.vertex_name(0),
                              left.certificate, right.certificate);
      pool.push_back(CertifiedInstance{s.hypergraph, *s.certificate});
    }
  }
  return pool;
}

}  // namespace

int main() {
  std::printf("acceptance suite, library version %s, seeds 20250807/20250808/20250809\n",
              kLibraryVersion);

  criterion(1, "excess obstruction defeats oversaturated bundles", [](std::string&) {
    bool ok = true;
    for (int t = 2; t <= 4 && ok; ++t) {
      for (int k = 1; k <= 3 && ok; ++k) {
        for (int q = 1; q <= 2 && ok; ++q) {
          auto h = full_edge_bundle(t, k, q);
          check(ok, is_k_wpc(h, k).ok);
          auto search = has_k_distinguishable_assignment(h, k);
          check(ok, !search.found);
          check(ok, search.excess_obstruction);
          check(ok, search.assignments_tried == 0);
          if (total_excess(h) <= 10) {
            enumerate_assignments(h, [&](const TreeAssignment& a) {
              auto g = flatten(a);
              check(ok, count_decompositions(g, k) == 0);
              check(ok, oracles::all_decompositions(g, k).empty());
              return ok;
            });
          }
        }
      }
    }
    return ok;
  });

  criterion(2, "two parallel doubled edges beat one spanning tree", [](std::string&) {
    bool ok = true;
    auto h = full_edge_bundle(2, 1, 1);
    check(ok, weak_partition_excess(h, Partition::parse("01", 2)) == 2);
    check(ok, total_excess(h) == 2);
    check(ok, !is_k_critical(h, 1));
    enumerate_assignments(h, [&](const TreeAssignment& a) {
      check(ok, count_decompositions(flatten(a), 1) == 0);
      return ok;
    });
    return ok;
  });

  criterion(3, "triple-edge block: excess, fibers, certificate", [](std::string&) {
    bool ok = true;
    auto ci = nongraphic_triple_block();
    const auto& h = ci.hypergraph;
    check(ok, total_excess(h) == 4);
    check(ok, is_k_critical(h, 2));
    check(ok, weak_partition_excess(h, Partition::parse("012", 3)) == 4);
    check(ok, weak_partition_excess(h, Partition::parse("011", 3)) == 3);
    check(ok, weak_partition_excess(h, Partition::parse("010", 3)) == 2);
    check(ok, weak_partition_excess(h, Partition::parse("001", 3)) == 2);
    auto g = flatten(ci.certificate.assignment);
    auto oracle = oracles::all_decompositions(g, 2);
    check(ok, oracle.size() == 4);
    auto fr = fibers(g, 2);
    check(ok, fr.total == 4);
    check(ok, fr.fibers.size() == 4);
    for (const auto& [sig, members] : fr.fibers) check(ok, members.size() == 1);
    check(ok, signature(g, ci.certificate.decomposition) == SignatureVector{0, 1, 1});
    check(ok, verify_certificate(ci.certificate).ok);
    return ok;
  });

  criterion(4, "two-vertex lines classify by comparing m with k", [](std::string&) {
    bool ok = true;
    for (int k = 1; k <= 3; ++k) {
      for (int m = 1; m <= 5; ++m) {
        auto lm = parallel_lines(m);
        check(ok, is_k_wpc(lm, k).ok == (m >= k));
        auto search = has_k_distinguishable_assignment(lm, k);
        check(ok, search.found == (m == k));
        if (m == k) {
          long long fact = 1;
          for (int i = 2; i <= k; ++i) fact *= i;
          CenterMap centers;
          centers.center.assign(m, 0);
          auto g = flatten(star_assignment(lm, centers));
          check(ok, count_decompositions(g, k) == fact);
        }
      }
    }
    return ok;
  });

  criterion(5, "certified pool: verification, wpc, uniqueness", [](std::string& detail) {
    bool ok = true;
    auto pool = certified_pool();
    detail = "pool size " + std::to_string(pool.size());
    for (const auto& ci : pool) {
      check(ok, verify_certificate(ci.certificate).ok);
      check(ok, certified_wpc(ci.certificate).holds);
      check(ok, is_k_wpc(ci.hypergraph, ci.certificate.k).ok);
      check(ok, is_k_critical(ci.hypergraph, ci.certificate.k));
      auto u = certified_uniqueness(ci.certificate);
      check(ok, u.forced);
      check(ok, u.fiber_checked);
      check(ok, u.fiber_singleton);
      if (!ok) break;
    }
    return ok;
  });

  criterion(6, "one-vertex sums stay critical and certified", [](std::string& detail) {
    bool ok = true;
    auto pool = certified_pool();
    int glued = 0;
    for (std::size_t i = 0; i < pool.size() && ok; ++i) {
      for (std::size_t j = i; j < pool.size() && ok; ++j) {
        if (pool[i].certificate.k != pool[j].certificate.k) continue;
        auto left = relabelled(pool[i], "A");
        auto right = relabelled(pool[j], "B");
        auto s = one_vertex_sum(left.hypergraph, left.hypergraph.vertex_name(0),
                                right.hypergraph, right.hypergraph.vertex_name(0),
                                left.certificate, right.certificate);
        ++glued;
        check(ok, s.certificate.has_value());
        check(ok, is_k_critical(s.hypergraph, left.certificate.k));
        auto g = flatten(s.certificate->assignment);
        check(ok, validate_decomposition(g, s.certificate->decomposition).ok);
        check(ok, verify_certificate(*s.certificate).ok);
      }
    }
    detail = std::to_string(glued) + " sums";
    return ok;
  });

  criterion(7, "slack identity on 1000 seeded triples and the fixtures", [](std::string&) {
    bool ok = true;
    std::mt19937 rng(20250807);
    for (int trial = 0; trial < 1000 && ok; ++trial) {
      std::uniform_int_distribution<int> pick_t(2, 6);
      std::uniform_int_distribution<int> pick_k(1, 3);
      auto inst = oracles::random_critical_instance(rng, pick_t(rng), pick_k(rng));
      auto p = oracles::random_partition(rng, inst.hypergraph.t());
      auto id = slack_identity_check(inst.assignment, inst.decomposition, p);
      check(ok, id.equal);
      check(ok, assignment_slack(inst.assignment,
                                 Partition::discrete(inst.hypergraph.t())) == 0);
    }
    for (const auto& ci : certified_pool()) {
      const auto& a = ci.certificate.assignment;
      const auto& d = ci.certificate.decomposition;
      for_each_partition(ci.hypergraph.t(), [&](const Partition& p) {
        check(ok, slack_identity_check(a, d, p).equal);
        return ok;
      });
      check(ok, assignment_slack(a, Partition::discrete(ci.hypergraph.t())) == 0);
      if (!ok) break;
    }
    return ok;
  });

  criterion(8, "bundle surplus is exactly q per merged block", [](std::string&) {
    bool ok = true;
    for (int t = 2; t <= 6 && ok; ++t) {
      for (int k = 1; k <= 3 && ok; ++k) {
        for (int q = 0; q <= 2 && ok; ++q) {
          auto h = full_edge_bundle(t, k, q);
          for_each_partition(t, [&](const Partition& p) {
            long long s = p.num_blocks();
            long long w = weak_partition_excess(h, p);
            check(ok, w - static_cast<long long>(k) * (s - 1) ==
                          static_cast<long long>(q) * (s - 1));
            return ok;
          });
        }
      }
    }
    return ok;
  });

  criterion(9, "weight calculus on 500 seeded families", [](std::string& detail) {
    bool ok = true;
    std::mt19937 rng(20250808);
    std::vector<IndexFamily> families;
    for (int trial = 0; trial < 500; ++trial) {
      families.push_back(oracles::random_index_family(rng, 8, 5));
    }
    // deterministic square families keep the implication non-vacuous
    families.push_back(make_index_family(2, {{1, 2}, {1}, {2}}));
    families.push_back(make_index_family(2, {{1, 2}, {1, 2}, {1, 2}}));
    families.push_back(make_index_family(1, {{1}, {1}}));
    int implications = 0;
    for (const auto& f : families) {
      const int t = static_cast<int>(f.sets.size());
      for (int mask = 1; mask < (1 << t) && ok; ++mask) {
        std::vector<int> J;
        for (int j = 0; j < t; ++j) {
          if (mask & (1 << j)) J.push_back(j + 1);
        }
        check(ok, weight(f, J) == weight_support_form(f, J));
      }
      for_each_partition(t, [&](const Partition& p) {
        auto id = weight_partition_identity(f, 1, p);
        check(ok, id.equal);
        return ok;
      });
      for (int k = 1; k <= 3 && ok; ++k) {
        if (check_weight_conditions(f, k).ok) {
          ++implications;
          auto sh = support_hypergraph(f);
          check(ok, is_k_wpc(sh.hypergraph, k).ok);
          check(ok, is_k_critical(sh.hypergraph, k));
        }
      }
      if (!ok) break;
    }
    detail = std::to_string(implications) + " square families";
    return ok && implications >= 3;
  });

  criterion(10, "pruned enumeration equals the k^E brute force", [](std::string& detail) {
    bool ok = true;
    std::mt19937 rng(20250809);
    long long graphs = 0;
    auto compare = [&](const LabelledMultigraph& g, int k) {
      if (g.edge_count() > 10 || k > 3) return;
      ++graphs;
      auto mine = all_decompositions(g, k);
      auto oracle = oracles::all_decompositions(g, k);
      check(ok, mine.size() == oracle.size());
      std::set<std::vector<int>> seen;
      for (const auto& d : mine) seen.insert(d.layer_of);
      check(ok, seen.size() == mine.size());
      for (const auto& e : oracle) check(ok, seen.count(e) == 1);
    };
    compare(flatten(nongraphic_triple_block().certificate.assignment), 2);
    compare(flatten(nongraphic_triple_block().certificate.assignment), 1);
    compare(flatten(nongraphic_triple_block().certificate.assignment), 3);
    {
      auto sat = saturated_star_block(4, 3, 0, 0, {{{0, 1}, {0, 2}, {0, 3}}});
      compare(flatten(sat.certificate.assignment), 3);
    }
    for (int trial = 0; trial < 40 && ok; ++trial) {
      std::uniform_int_distribution<int> pick_t(2, 4);
      std::uniform_int_distribution<int> pick_k(1, 3);
      int k = pick_k(rng);
      auto inst = oracles::random_critical_instance(rng, pick_t(rng), k);
      auto g = flatten(inst.assignment);
      compare(g, k);
      compare(g, k == 1 ? 2 : k - 1);  // mismatched budgets must agree on emptiness
    }
    detail = std::to_string(graphs) + " graphs";
    return ok;
  });

  criterion(11, "interior layers cannot be forced by signatures", [](std::string&) {
    bool ok = true;
    // arithmetic half: the spread vector and the concentrated vector share
    // total and weighted total for k = 3, interior index 1
    for (int n = 2; n <= 4; ++n) {
      std::vector<long long> spread{1, static_cast<long long>(n) - 2, 1};
      std::vector<long long> concentrated{0, static_cast<long long>(n), 0};
      long long sum_a = 0, sum_b = 0, avg_a = 0, avg_b = 0;
      for (int i = 0; i < 3; ++i) {
        sum_a += spread[i];
        sum_b += concentrated[i];
        avg_a += i * spread[i];
        avg_b += i * concentrated[i];
      }
      check(ok, sum_a == n && sum_b == n);
      check(ok, avg_a == 1 * n && avg_b == 1 * n);
      check(ok, spread != concentrated);
    }

    // brute-force half: one assignment, two decompositions, equal signature
    // for the triple label, different interior usage
    LabelledMultihypergraph h{{"r", "a", "b"},
                              {{"f", {0, 1, 2}},
                               {"g", {0, 1, 2}},
                               {"h1", {0, 1}},
                               {"h2", {0, 2}}}};
    auto a = star_assignment(h, CenterMap{{0, 0, 0, 0}});
    auto g = flatten(a);
    bool exhibited = false;
    auto fr = fibers(g, 3);
    for (const auto& [sig, members] : fr.fibers) {
      if (members.size() < 2) continue;
      std::set<std::vector<int>> f_profiles;
      for (const auto& d : members) {
        std::vector<int> profile(3, 0);
        for (int j = 0; j < g.edge_count(); ++j) {
          if (g.edges[j].label_index == 0) ++profile[d.layer_of[j]];
        }
        f_profiles.insert(profile);
      }
      if (f_profiles.count({0, 2, 0}) && f_profiles.count({1, 0, 1})) exhibited = true;
    }
    check(ok, exhibited);
    return ok;
  });

  criterion(12, "pruning example: wpc holds, no subset meets the budget", [](std::string&) {
    bool ok = true;
    auto h = subhypergraph_pruning_counterexample();
    check(ok, is_k_wpc(h, 1).ok);
    check(ok, total_excess(h) == 4);
    for (int mask = 1; mask < (1 << h.edge_count()); ++mask) {
      long long rho = 0;
      for (int i = 0; i < h.edge_count(); ++i) {
        if (mask & (1 << i)) rho += static_cast<long long>(h.edge(i).support.size()) - 1;
      }
      check(ok, rho != 3);
    }
    return ok;
  });

  if (failures == 0) {
    std::printf("all 12 criteria pass\n");
  } else {
    std::printf("%d criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
