#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "cubicdec/cycle_tools.hpp"
#include "cubicdec/decomposer.hpp"
#include "cubicdec/oracle.hpp"
#include "test_graphs.hpp"

using namespace cubicdec;
using namespace testgraphs;

namespace {

bool has_via(const case_attempt& att, const std::string& tag) {
  return std::find(att.via.begin(), att.via.end(), tag) != att.via.end();
}

bool has_via(const trace_log& trace, const std::string& tag) {
  return std::find(trace.via.begin(), trace.via.end(), tag) != trace.via.end();
}

ham_path identity_path(const cubic_graph& g) {
  std::vector<int> order(static_cast<size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) order[static_cast<size_t>(v)] = v;
  return ham_path(g, order);
}

edge_set edges_of(std::initializer_list<std::pair<int, int>> pairs) {
  edge_set s;
  for (auto [u, v] : pairs) s.insert(edge(u, v));
  return s;
}

// applies a plan and checks the full decomposition contract
decomposition apply_and_check(const cubic_graph& g, const partition_plan& plan) {
  decomposition dec = apply_plan(g, plan);
  verify_report rep = verify_decomposition(g, dec);
  CAPTURE(rep.checks.size());
  for (const auto& chk : rep.checks) {
    INFO(chk.name, ": ", chk.detail);
    CHECK(chk.ok);
  }
  REQUIRE(dec.cycles.size() <= 2);
  return dec;
}

} // namespace

TEST_CASE("case selectors reject paths of the wrong shape") {
  cubic_graph dj = disjoint_no_long_chord_gadget();
  CHECK_THROWS_AS(case1(dj, identity_path(dj)), case_violation);

  cubic_graph ov = theta_no_cross_gadget();
  CHECK_THROWS_AS(case2(ov, identity_path(ov), true), case_violation);

  cubic_graph k = k4();
  ham_path adjacent_ends(k, {0, 1, 2, 3});
  CHECK_THROWS_AS(case1(k, adjacent_ends), case_violation);
  CHECK_THROWS_AS(case2(k, adjacent_ends, true), case_violation);
}

TEST_CASE("order-2 middle frame path collapses to a hamiltonian cycle") {
  cubic_graph g = p2_collapse_gadget();
  case_attempt att = case1(g, identity_path(g));
  REQUIRE(att.kind == case_attempt::outcome::ham_cycle);
  CHECK(has_via(att, "Case1.P2Order2"));
  CHECK(att.cycle == std::vector<int>{0, 1, 2, 3, 7, 6, 5, 4});
}

TEST_CASE("frame paths without cross edges each close a chordless cycle") {
  cubic_graph g = theta_no_cross_gadget();
  case_attempt att = case1(g, identity_path(g));
  REQUIRE(att.kind == case_attempt::outcome::plan_ready);
  CHECK(att.branch == "Case1.Sub1");
  CHECK(att.witnesses.at("jp") == "3");
  CHECK(att.witnesses.at("j") == "10");
  CHECK(att.witnesses.at("i") == "5");
  CHECK(att.witnesses.at("ip") == "12");

  REQUIRE(att.plan.cycles.size() == 2);
  CHECK(att.plan.cycles[0] == std::vector<int>{0, 1, 2});
  CHECK(att.plan.cycles[1] == std::vector<int>{8, 7, 6});
  CHECK(att.plan.tree_vertices == std::vector<int>{3, 4, 5, 9, 10, 11, 12, 13});
  CHECK(att.plan.tree_edges ==
        edges_of({{3, 4}, {4, 5}, {9, 10}, {10, 11}, {11, 12}, {12, 13}, {4, 13}}));

  decomposition dec = apply_and_check(g, att.plan);
  CHECK(dec.matching == edges_of({{10, 12}, {11, 13}}));
}

TEST_CASE("cycles on both carved prefixes") {
  cubic_graph g = two_prefix_cycles_gadget();
  case_attempt att = case1(g, identity_path(g));
  REQUIRE(att.kind == case_attempt::outcome::plan_ready);
  CHECK(att.branch == "Case1.Sub2.b");
  CHECK(att.witnesses.at("a") == "3");
  CHECK(att.witnesses.at("b") == "6");
  REQUIRE(att.plan.cycles.size() == 2);
  CHECK(att.plan.cycles[0] == std::vector<int>{0, 1, 2});
  CHECK(att.plan.cycles[1] == std::vector<int>{9, 8, 7});

  decomposition dec = apply_and_check(g, att.plan);
  CHECK(dec.matching == edges_of({{3, 6}, {5, 11}}));
}

TEST_CASE("crossing frame prefixes close into a single theta cycle") {
  cubic_graph g = prism();
  ham_path p(g, {0, 1, 2, 5, 3, 4});
  case_attempt att = case1(g, p);
  REQUIRE(att.kind == case_attempt::outcome::plan_ready);
  CHECK(att.branch == "Case1.Sub2.a");
  REQUIRE(att.plan.cycles.size() == 1);
  CHECK(att.plan.cycles[0] == std::vector<int>{3, 0, 2, 5});
  CHECK(att.plan.tree_vertices == std::vector<int>{1, 4});
  CHECK(att.plan.tree_edges == edges_of({{1, 4}}));

  decomposition dec = apply_and_check(g, att.plan);
  CHECK(dec.matching.empty());
}

TEST_CASE("isolated prefix cycle pairs with the third frame path") {
  cubic_graph g = isolated_cycle_third_path_gadget();
  case_attempt att = case1(g, identity_path(g));
  REQUIRE(att.kind == case_attempt::outcome::plan_ready);
  CHECK(att.branch == "Case1.Sub2.c.i");
  CHECK(has_via(att, "SwappedAB"));
  REQUIRE(att.plan.cycles.size() == 2);
  CHECK(att.plan.cycles[0] == std::vector<int>{13, 12, 11});
  CHECK(att.plan.cycles[1] == std::vector<int>{15, 16, 17});

  decomposition dec = apply_and_check(g, att.plan);
  CHECK(dec.matching == edges_of({{0, 10}, {1, 9}, {2, 8}, {5, 7}}));
}

TEST_CASE("isolated cycle melts when the far prefixes cross") {
  cubic_graph g = isolated_cycle_cross_edge_gadget();
  case_attempt att = case1(g, identity_path(g));
  REQUIRE(att.kind == case_attempt::outcome::plan_ready);
  CHECK(att.branch == "Case1.Sub2.c.ii");
  CHECK(has_via(att, "SwappedAB"));
  CHECK(att.witnesses.at("a2") == "2");
  CHECK(att.witnesses.at("b2") == "16");
  REQUIRE(att.plan.cycles.size() == 1);
  CHECK(att.plan.cycles[0] == std::vector<int>{14, 0, 1, 2, 16, 15});

  decomposition dec = apply_and_check(g, att.plan);
  CHECK(dec.matching == edges_of({{11, 13}, {4, 12}, {6, 8}, {5, 17}}));
}

TEST_CASE("isolated cycle melts into the closed theta") {
  cubic_graph g = isolated_cycle_closed_theta_gadget();
  case_attempt att = case1(g, identity_path(g));
  REQUIRE(att.kind == case_attempt::outcome::plan_ready);
  CHECK(att.branch == "Case1.Sub2.c.iii");
  CHECK(has_via(att, "SwappedAB"));
  REQUIRE(att.plan.cycles.size() == 1);
  CHECK(att.plan.cycles[0] == std::vector<int>{14, 0, 1, 2, 3, 17, 16, 15});

  decomposition dec = apply_and_check(g, att.plan);
  CHECK(dec.matching == edges_of({{11, 13}, {4, 12}}));
}

TEST_CASE("monotone jump walk with a leftover connector") {
  cubic_graph g = monotone_jump_gadget();
  case_attempt att = case1(g, identity_path(g));
  REQUIRE(att.kind == case_attempt::outcome::plan_ready);
  CHECK(att.branch == "Case1.Sub2.c.Mono");
  CHECK(has_via(att, "SwappedAB"));
  REQUIRE(att.plan.cycles.size() == 1);
  CHECK(att.plan.cycles[0] == std::vector<int>{14, 13, 11, 10, 0});
  CHECK(att.plan.tree_edges.contains(edge(12, 15)));

  decomposition dec = apply_and_check(g, att.plan);
  CHECK(dec.matching == edges_of({{1, 9}, {2, 8}, {6, 16}, {5, 17}, {4, 7}}));
}

TEST_CASE("disjoint chords without a spanning window chord") {
  cubic_graph g = disjoint_no_long_chord_gadget();
  case_attempt att = case2(g, identity_path(g), true);
  REQUIRE(att.kind == case_attempt::outcome::plan_ready);
  CHECK(att.branch == "Case2.Sub1");
  REQUIRE(att.plan.cycles.size() == 2);
  CHECK(att.plan.cycles[0] == std::vector<int>{0, 1, 2});
  CHECK(att.plan.cycles[1] == std::vector<int>{9, 10, 11});
  CHECK(att.plan.tree_edges == edges_of({{3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}}));

  decomposition dec = apply_and_check(g, att.plan);
  CHECK(dec.matching == edges_of({{3, 6}}));
}

TEST_CASE("cycle-free bracketed segments close the four-corner cycle") {
  cubic_graph g = four_corner_gadget();
  case_attempt att = case2(g, identity_path(g), true);
  REQUIRE(att.kind == case_attempt::outcome::plan_ready);
  CHECK(att.branch == "Case2.Sub2.a");
  CHECK(att.witnesses.at("g") == "2");
  CHECK(att.witnesses.at("h") == "4");
  CHECK(att.witnesses.at("e") == "11");
  CHECK(att.witnesses.at("f") == "13");
  REQUIRE(att.plan.cycles.size() == 1);
  CHECK(att.plan.cycles[0] == std::vector<int>{1, 2, 3, 10, 11, 12});

  decomposition dec = apply_and_check(g, att.plan);
  CHECK(dec.matching == edges_of({{5, 7}, {6, 8}}));
}

TEST_CASE("isolated bracketed cycle pairs with the head segment cycle") {
  cubic_graph g = isolated_window_cycle_gadget();
  case_attempt att = case2(g, identity_path(g), true);
  REQUIRE(att.kind == case_attempt::outcome::plan_ready);
  CHECK(att.branch == "Case2.Sub2.b.Iso");
  REQUIRE(att.plan.cycles.size() == 2);
  CHECK(att.plan.cycles[0] == std::vector<int>{10, 11, 12});
  CHECK(att.plan.cycles[1] == std::vector<int>{0, 1, 2});

  decomposition dec = apply_and_check(g, att.plan);
  CHECK(dec.matching == edges_of({{13, 15}, {4, 9}, {3, 6}}));
}

TEST_CASE("isolated bracketed cycle on the left side swaps orientation") {
  cubic_graph g = isolated_window_cycle_mirror_gadget();
  case_attempt att = case2(g, identity_path(g), true);
  REQUIRE(att.kind == case_attempt::outcome::plan_ready);
  CHECK(att.branch == "Case2.Sub2.b.Iso");
  CHECK(has_via(att, "SwappedGHEF"));
  REQUIRE(att.plan.cycles.size() == 2);
  CHECK(att.plan.cycles[0] == std::vector<int>{5, 4, 3});
  CHECK(att.plan.cycles[1] == std::vector<int>{13, 14, 15});

  decomposition dec = apply_and_check(g, att.plan);
  CHECK(dec.matching == edges_of({{0, 2}, {6, 11}, {9, 12}}));
}

TEST_CASE("leaking bracketed cycle forces the monotone jump walk") {
  cubic_graph g = leaky_window_cycle_gadget();
  case_attempt att = case2(g, identity_path(g), true);
  REQUIRE(att.kind == case_attempt::outcome::plan_ready);
  CHECK(att.branch == "Case2.Sub2.b.Mono");
  REQUIRE(att.plan.cycles.size() == 1);
  CHECK(att.plan.cycles[0] == std::vector<int>{12, 13, 15, 16, 17, 1, 2});
  CHECK(att.plan.tree_edges.contains(edge(7, 14)));

  decomposition dec = apply_and_check(g, att.plan);
  CHECK(dec.matching == edges_of({{0, 3}, {9, 18}, {4, 6}, {5, 10}}));
}

TEST_CASE("cycles inside both bracketed segments") {
  cubic_graph g = two_window_cycles_gadget();
  case_attempt att = case2(g, identity_path(g), true);
  REQUIRE(att.kind == case_attempt::outcome::plan_ready);
  CHECK(att.branch == "Case2.Sub2.c");
  REQUIRE(att.plan.cycles.size() == 2);
  CHECK(att.plan.cycles[0] == std::vector<int>{3, 4, 5});
  CHECK(att.plan.cycles[1] == std::vector<int>{12, 13, 14});

  decomposition dec = apply_and_check(g, att.plan);
  CHECK(dec.matching == edges_of({{0, 2}, {1, 16}, {6, 11}, {15, 17}}));
}

TEST_CASE("single spanning chord with a cycle past its head landing") {
  cubic_graph g = pinned_window_gadget();
  case_attempt att = case2(g, identity_path(g), true);
  REQUIRE(att.kind == case_attempt::outcome::plan_ready);
  CHECK(att.branch == "Case2.Sub3.TwoCycles");
  CHECK(att.witnesses.at("s") == "2");
  CHECK(att.witnesses.at("t") == "15");
  REQUIRE(att.plan.cycles.size() == 2);
  CHECK(att.plan.cycles[0] == std::vector<int>{3, 4, 5});
  CHECK(att.plan.cycles[1] == std::vector<int>{10, 11, 12});

  decomposition dec = apply_and_check(g, att.plan);
  CHECK(dec.matching == edges_of({{0, 2}, {1, 14}, {13, 15}}));
}

TEST_CASE("tail-side cycle is reached through the reversed path") {
  cubic_graph g = mirrored_window_gadget();
  case_attempt att = case2(g, identity_path(g), true);
  REQUIRE(att.kind == case_attempt::outcome::plan_ready);
  CHECK(att.branch == "Case2.Sub3.TwoCycles");
  CHECK(has_via(att, "Mirrored"));
  REQUIRE(att.plan.cycles.size() == 2);
  CHECK(att.plan.cycles[0] == std::vector<int>{12, 11, 10});
  CHECK(att.plan.cycles[1] == std::vector<int>{2, 1, 0});

  decomposition dec = apply_and_check(g, att.plan);
  CHECK(dec.matching == edges_of({{13, 17}, {3, 7}, {4, 8}, {14, 16}}));
}

TEST_CASE("forward third neighbor closes both end cycles") {
  cubic_graph g = rewired_window_gadget();
  case_attempt att = case2(g, identity_path(g), true);
  REQUIRE(att.kind == case_attempt::outcome::plan_ready);
  CHECK(att.branch == "Case2.Sub3.Rewire");
  CHECK(att.witnesses.at("k") == "8");
  REQUIRE(att.plan.cycles.size() == 2);
  CHECK(att.plan.cycles[0] == std::vector<int>{0, 3, 4, 5});
  CHECK(att.plan.cycles[1] == std::vector<int>{15, 9, 10, 11});
  CHECK(att.plan.tree_edges.contains(edge(1, 13)));
  CHECK(att.plan.tree_edges.contains(edge(2, 7)));

  decomposition dec = apply_and_check(g, att.plan);
  CHECK(dec.matching == edges_of({{8, 12}}));
}

TEST_CASE("tight spanning chord splices a hamiltonian cycle") {
  cubic_graph g = spliced_window_gadget();
  case_attempt att = case2(g, identity_path(g), true);
  REQUIRE(att.kind == case_attempt::outcome::ham_cycle);
  CHECK(has_via(att, "Case2.Sub3.Ham"));
  CHECK(att.cycle == std::vector<int>{0, 1, 6, 7, 5, 4, 3, 2});
}

TEST_CASE("backward third neighbor yields a wider replacement path") {
  cubic_graph g = rewire_replacement_gadget();
  case_attempt att = case2(g, identity_path(g), true);
  REQUIRE(att.kind == case_attempt::outcome::replacement_path);
  CHECK(has_via(att, "Case2.Sub3.MaximalityViolation"));
  REQUIRE(att.replacement.has_value());
  CHECK(att.replacement->order() ==
        std::vector<int>{2, 3, 1, 0, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17});

  case_attempt guarded = case2(g, identity_path(g), false);
  CHECK(guarded.kind == case_attempt::outcome::gap);
}

TEST_CASE("decompose routes the prism through its first crossing path") {
  cubic_graph g = prism();
  decompose_output out = decompose(g);
  REQUIRE(out.status == decompose_status::ok);
  CHECK(out.trace.branch == "Case1.Sub2.a");
  CHECK(out.trace.path == std::vector<int>{0, 1, 2, 5, 3, 4});
  CHECK(out.trace.proof_gaps == 0);
  CHECK(out.dec.matching.empty());
  REQUIRE(out.dec.cycles.size() == 1);
  CHECK(verify_decomposition(g, out.dec).ok);
}

TEST_CASE("decompose splits the petersen graph") {
  cubic_graph g = petersen();
  decompose_output out = decompose(g);
  REQUIRE(out.status == decompose_status::ok);
  CHECK(out.trace.branch == "Case1.Sub2.a");
  CHECK(out.trace.proof_gaps == 0);
  CHECK(out.dec.tree.size() == 9);
  CHECK(out.dec.matching == edges_of({{7, 9}}));
  REQUIRE(out.dec.cycles.size() == 1);
  CHECK(out.dec.cycles[0] == cycle_edge_set({5, 0, 1, 6, 8}));
  CHECK(verify_decomposition(g, out.dec).ok);
}

TEST_CASE("decompose handles the complete graph via the degenerate split") {
  cubic_graph g = k4();
  decompose_output out = decompose(g);
  REQUIRE(out.status == decompose_status::ok);
  CHECK(out.trace.branch == "HamiltonianFallback.K4");
  CHECK(out.dec.tree == edges_of({{0, 1}, {0, 2}, {0, 3}}));
  CHECK(out.dec.matching.empty());
  REQUIRE(out.dec.cycles.size() == 1);
  CHECK(out.dec.cycles[0] == cycle_edge_set({1, 2, 3}));
  CHECK(verify_decomposition(g, out.dec).ok);
}

TEST_CASE("decompose falls back to search on the utility graph") {
  cubic_graph g = k33();
  decompose_output out = decompose(g);
  REQUIRE(out.status == decompose_status::ok);
  CHECK(out.trace.branch == "HamiltonianFallback.Oracle");
  CHECK(out.dec.cycles.size() <= 2);
  CHECK(verify_decomposition(g, out.dec).ok);
}

TEST_CASE("rotation recovers a crossing path from a hamiltonian cycle") {
  cubic_graph g = prism();
  decompose_output out = hamiltonian_fallback(g, {0, 1, 4, 3, 5, 2}, true);
  REQUIRE(out.status == decompose_status::ok);
  CHECK(has_via(out.trace, "HamiltonianFallback.Rotation"));
  CHECK(out.trace.branch == "Case1.Sub2.a");
  CHECK(out.dec.matching == edges_of({{3, 5}}));
  CHECK(verify_decomposition(g, out.dec).ok);
}

TEST_CASE("decompose reenters after the middle frame path collapses") {
  cubic_graph g = p2_collapse_gadget();
  decompose_output out = decompose(g);
  REQUIRE(out.status == decompose_status::ok);
  CHECK(has_via(out.trace, "Case1.P2Order2"));
  CHECK(out.trace.proof_gaps == 0);
  CHECK(out.dec.cycles.size() <= 2);
  CHECK(verify_decomposition(g, out.dec).ok);
}

TEST_CASE("graphs without a hamiltonian path are reported as such") {
  cubic_graph g = nontraceable_gadget();
  decompose_output out = decompose(g);
  CHECK(out.status == decompose_status::not_traceable);
  CHECK(out.trace.branch == "NotTraceable");
}

TEST_CASE("size bound defers unproven disjoint instances unless forced") {
  cubic_graph g = disjoint_no_long_chord_gadget();
  decompose_options opts;
  opts.case2_bound = 4;
  opts.scan_cap = 1;
  decompose_output refused = decompose(g, opts);
  CHECK(refused.status == decompose_status::case2_refused);
  CHECK(refused.trace.branch == "Case2Refused");

  opts.force = true;
  decompose_output forced = decompose(g, opts);
  REQUIRE(forced.status == decompose_status::ok);
  CHECK(forced.trace.proof_gaps == 0);
  CHECK(verify_decomposition(g, forced.dec).ok);
}

TEST_CASE("every named graph decomposes cleanly end to end") {
  std::vector<std::pair<std::string, cubic_graph>> zoo = {
      {"k4", k4()},
      {"k33", k33()},
      {"prism", prism()},
      {"cube", cube()},
      {"petersen", petersen()},
      {"chord_indices", chord_indices_gadget()},
      {"missing_connector", missing_connector_gadget()},
      {"theta_no_cross", theta_no_cross_gadget()},
      {"two_prefix_cycles", two_prefix_cycles_gadget()},
      {"isolated_cycle_third_path", isolated_cycle_third_path_gadget()},
      {"isolated_cycle_cross_edge", isolated_cycle_cross_edge_gadget()},
      {"isolated_cycle_closed_theta", isolated_cycle_closed_theta_gadget()},
      {"monotone_jump", monotone_jump_gadget()},
      {"disjoint_no_long_chord", disjoint_no_long_chord_gadget()},
      {"p2_collapse", p2_collapse_gadget()},
      {"four_corner", four_corner_gadget()},
      {"two_window_cycles", two_window_cycles_gadget()},
      {"isolated_window_cycle", isolated_window_cycle_gadget()},
      {"isolated_window_cycle_mirror", isolated_window_cycle_mirror_gadget()},
      {"leaky_window_cycle", leaky_window_cycle_gadget()},
      {"pinned_window", pinned_window_gadget()},
      {"mirrored_window", mirrored_window_gadget()},
      {"rewired_window", rewired_window_gadget()},
      {"spliced_window", spliced_window_gadget()},
      {"rewire_replacement", rewire_replacement_gadget()},
  };
  for (const auto& [name, g] : zoo) {
    CAPTURE(name);
    decompose_output out = decompose(g);
    REQUIRE(out.status == decompose_status::ok);
    CHECK(out.trace.proof_gaps == 0);
    CHECK(out.dec.cycles.size() <= 2);
    verify_report rep = verify_decomposition(g, out.dec);
    for (const auto& chk : rep.checks) {
      INFO(name, " ", chk.name, ": ", chk.detail);
      CHECK(chk.ok);
    }
  }
}
