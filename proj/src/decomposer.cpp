#include "cubicdec/decomposer.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "cubicdec/cycle_tools.hpp"
#include "cubicdec/oracle.hpp"

namespace cubicdec {

namespace {

using outcome = case_attempt::outcome;

// vertices at the inclusive 1-based position range, ascending or descending
std::vector<int> span(const ham_path& p, int from, int to) {
  std::vector<int> out;
  int step = from <= to ? 1 : -1;
  for (int k = from;; k += step) {
    out.push_back(p.v(k));
    if (k == to) break;
  }
  return out;
}

void append(std::vector<int>& dst, const std::vector<int>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

std::vector<int> reversed_tail(const std::vector<int>& path, int first_kept) {
  std::vector<int> out(path.begin() + first_kept, path.end());
  std::reverse(out.begin(), out.end());
  return out;
}

// tree part = complement of the cycles; its tree = pool edges inside it plus
// any explicitly provided connectors
partition_plan assemble_plan(const cubic_graph& g, std::vector<std::vector<int>> cycles,
                             const edge_set& pool, const edge_set& connectors = {}) {
  std::vector<char> on_cycle(g.order(), 0);
  for (const auto& c : cycles)
    for (int v : c) on_cycle[v] = 1;
  partition_plan plan;
  plan.cycles = std::move(cycles);
  for (int v = 0; v < g.order(); ++v)
    if (!on_cycle[v]) plan.tree_vertices.push_back(v);
  for (const edge& e : pool)
    if (!on_cycle[e.u] && !on_cycle[e.v]) plan.tree_edges.insert(e);
  for (const edge& e : connectors) plan.tree_edges.insert(e);
  return plan;
}

case_attempt gap_out(case_attempt att, std::string reason) {
  att.kind = outcome::gap;
  att.gap_reason = std::move(reason);
  return att;
}

// inter-path chord between the interiors of two frame paths; distances count
// edges from the shared endpoint v_j along each path
struct cross_hit {
  int da = 0, db = 0, a = 0, b = 0;
  auto key() const { return std::make_tuple(da + db, da, db, a, b); }
};

std::vector<cross_hit> cross_hits(const cubic_graph& g, const std::vector<int>& pa,
                                  const std::vector<int>& pb) {
  std::vector<char> in_b(g.order(), 0);
  std::vector<int> idx_b(g.order(), -1);
  for (int k = 1; k + 1 < static_cast<int>(pb.size()); ++k) {
    in_b[pb[k]] = 1;
    idx_b[pb[k]] = k;
  }
  std::vector<cross_hit> hits;
  for (int k = 1; k + 1 < static_cast<int>(pa.size()); ++k) {
    for (int w : g.neighbors(pa[k]))
      if (in_b[w]) hits.push_back({k, idx_b[w], pa[k], w});
  }
  std::sort(hits.begin(), hits.end(),
            [](const cross_hit& x, const cross_hit& y) { return x.key() < y.key(); });
  return hits;
}

edge_set run_connectors(const std::vector<leftover_run>& runs) {
  edge_set out;
  for (const auto& r : runs) out.insert(r.connector);
  return out;
}

}  // namespace

case_attempt case1(const cubic_graph& g, const ham_path& p) {
  path_class cls = chord_indices(g, p);
  if (cls.kind != path_kind::overlapping)
    throw case_violation("case1 requires a path with overlapping chords");
  const chord_indices_t c = *cls.chords;
  const int n = p.length();

  case_attempt att;
  att.witnesses["jp"] = std::to_string(c.jp);
  att.witnesses["j"] = std::to_string(c.j);
  att.witnesses["i"] = std::to_string(c.i);
  att.witnesses["ip"] = std::to_string(c.ip);

  if (c.j == c.i + 1) {
    // the middle frame path collapses to the single edge v_i v_j, so the two
    // chords splice the remaining segments into a Hamiltonian cycle
    att.kind = outcome::ham_cycle;
    att.cycle = span(p, 1, c.i);
    append(att.cycle, span(p, n, c.j));
    att.via.push_back("Case1.P2Order2");
    return att;
  }

  // three internally disjoint v_j..v_i paths covering E(P) plus both chords
  std::vector<std::vector<int>> paths(3);
  paths[0] = {p.v(c.j)};
  append(paths[0], span(p, 1, c.i));
  paths[1] = span(p, c.j, c.i);
  paths[2] = span(p, c.j, n);
  paths[2].push_back(p.v(c.i));

  edge_set pool = path_edge_set(p.order());
  pool.insert(edge(p.v(1), p.v(c.j)));
  pool.insert(edge(p.v(c.i), p.v(n)));

  static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  int pr = -1, ps = -1;
  std::vector<cross_hit> hits;
  for (const auto& pair : kPairs) {
    hits = cross_hits(g, paths[pair[0]], paths[pair[1]]);
    if (!hits.empty()) {
      pr = pair[0];
      ps = pair[1];
      break;
    }
  }

  if (pr < 0) {
    // no edges between distinct frame paths: each of the first two frame
    // paths closes a cycle on its own interior chords
    auto c1 = chordless_cycle_formed_by(g, paths[0]);
    auto c2 = chordless_cycle_formed_by(g, paths[1]);
    if (!c1 || !c2) return gap_out(std::move(att), "Case1.Sub1:expected cycle on a frame path");
    att.kind = outcome::plan_ready;
    att.plan = assemble_plan(g, {c1->vertices, c2->vertices}, pool);
    att.branch = "Case1.Sub1";
    return att;
  }

  const cross_hit hit = hits.front();
  att.witnesses["pair"] = "P" + std::to_string(pr + 1) + ",P" + std::to_string(ps + 1);
  att.witnesses["a"] = std::to_string(hit.a);
  att.witnesses["b"] = std::to_string(hit.b);

  std::vector<int> full_a = paths[pr];
  std::vector<int> full_b = paths[ps];
  std::vector<int> full_d = paths[3 - pr - ps];
  std::vector<int> pref_a(full_a.begin(), full_a.begin() + hit.da + 1);
  std::vector<int> pref_b(full_b.begin(), full_b.begin() + hit.db + 1);

  auto cycs_a = cycles_formed_by(g, pref_a);
  auto cycs_b = cycles_formed_by(g, pref_b);

  if (cycs_a.empty() && cycs_b.empty()) {
    // both carved prefixes are cycle-free: glue them through the chord ab
    // into a single theta cycle through v_j
    std::vector<int> cyc = pref_a;
    append(cyc, reversed_tail(pref_b, 1));
    att.kind = outcome::plan_ready;
    att.plan = assemble_plan(g, {cyc}, pool);
    att.branch = "Case1.Sub2.a";
    return att;
  }

  if (!cycs_a.empty() && !cycs_b.empty()) {
    // shortest formed cycle on each prefix; the minimality of ab keeps the
    // two cycles edge-disjoint from each other
    if (!cycs_a.front().chordless || !cycs_b.front().chordless)
      return gap_out(std::move(att), "Case1.Sub2.b:shortest formed cycle has a chord");
    att.kind = outcome::plan_ready;
    att.plan = assemble_plan(g, {cycs_a.front().vertices, cycs_b.front().vertices}, pool);
    att.branch = "Case1.Sub2.b";
    return att;
  }

  // exactly one side carries cycles; relabel so it is the A side
  if (!cycs_b.empty()) {
    std::swap(full_a, full_b);
    std::swap(pref_a, pref_b);
    std::swap(cycs_a, cycs_b);
    att.via.push_back("SwappedAB");
  }

  const formed_cycle* iso = nullptr;
  for (const auto& fc : cycs_a) {
    if (isolated_from(g, fc.vertices, full_a)) {
      iso = &fc;
      break;
    }
  }

  if (iso == nullptr) {
    // every formed cycle on the prefix leaks an edge out of the host path:
    // replace the prefix by its shortest monotone jump sequence and hang the
    // skipped runs off the tree through those leaking edges
    std::vector<int> mono = monotone_path_indices(g, pref_a);
    std::vector<int> cyc;
    for (int idx : mono) cyc.push_back(pref_a[idx]);
    append(cyc, reversed_tail(pref_b, 1));
    std::vector<leftover_run> runs;
    try {
      runs = leftover_segments(g, pref_a, mono, full_a);
    } catch (const missing_connector&) {
      return gap_out(std::move(att), "Case1.Sub2.c.Mono:leftover run has no outside edge");
    }
    att.kind = outcome::plan_ready;
    att.plan = assemble_plan(g, {cyc}, pool, run_connectors(runs));
    att.branch = "Case1.Sub2.c.Mono";
    return att;
  }

  if (!iso->chordless)
    return gap_out(std::move(att), "Case1.Sub2.c:smallest isolated cycle has a chord");
  const std::vector<int> iso_cycle = iso->vertices;

  auto cyc_b = chordless_cycle_formed_by(g, full_b);
  auto cyc_d = chordless_cycle_formed_by(g, full_d);
  if (cyc_b || cyc_d) {
    // the isolated cycle pairs with a cycle on one of the other frame paths
    att.kind = outcome::plan_ready;
    att.plan = assemble_plan(g, {iso_cycle, cyc_b ? cyc_b->vertices : cyc_d->vertices}, pool);
    att.branch = "Case1.Sub2.c.i";
    return att;
  }

  std::vector<cross_hit> hits2 = cross_hits(g, full_b, full_d);
  if (!hits2.empty()) {
    // theta cycle through v_j on the other two frame paths; the isolated
    // cycle dissolves into the tree, its closing chord into the matching
    const cross_hit h2 = hits2.front();
    att.witnesses["a2"] = std::to_string(h2.a);
    att.witnesses["b2"] = std::to_string(h2.b);
    std::vector<int> cyc(full_b.begin(), full_b.begin() + h2.da + 1);
    std::vector<int> pref_d(full_d.begin(), full_d.begin() + h2.db + 1);
    append(cyc, reversed_tail(pref_d, 1));
    att.kind = outcome::plan_ready;
    att.plan = assemble_plan(g, {cyc}, pool);
    att.branch = "Case1.Sub2.c.ii";
    return att;
  }

  // no cycles and no cross edges on the other two frame paths: they close
  // into one long cycle through both v_j and v_i
  std::vector<int> cyc = full_b;
  std::vector<int> d_inner(full_d.begin() + 1, full_d.end() - 1);
  std::reverse(d_inner.begin(), d_inner.end());
  append(cyc, d_inner);
  att.kind = outcome::plan_ready;
  att.plan = assemble_plan(g, {cyc}, pool);
  att.branch = "Case1.Sub2.c.iii";
  return att;
}

namespace {

// chord spanning both outer windows: s before one window edge, t after the
// other (1-based positions)
struct long_chord {
  int s = 0, t = 0;
};

case_attempt case2_impl(const cubic_graph& g, const ham_path& p, bool maximality_ok,
                        bool allow_mirror) {
  path_class cls = chord_indices(g, p);
  if (cls.kind != path_kind::disjoint)
    throw case_violation("case2 requires a path with disjoint chords");
  const chord_indices_t c = *cls.chords;
  const int n = p.length();

  case_attempt att;
  att.witnesses["jp"] = std::to_string(c.jp);
  att.witnesses["j"] = std::to_string(c.j);
  att.witnesses["i"] = std::to_string(c.i);
  att.witnesses["ip"] = std::to_string(c.ip);

  edge_set pool = path_edge_set(p.order());
  pool.insert(edge(p.v(1), p.v(c.j)));
  pool.insert(edge(p.v(c.i), p.v(n)));

  std::vector<long_chord> lspan;
  for (const edge& e : g.edges()) {
    int a = p.pos(e.u), b = p.pos(e.v);
    if (a > b) std::swap(a, b);
    if (b == a + 1) continue;
    if (a < c.j && b > c.i) lspan.push_back({a, b});
  }
  std::sort(lspan.begin(), lspan.end(),
            [](const long_chord& x, const long_chord& y) { return std::tie(x.s, x.t) < std::tie(y.s, y.t); });

  bool primed = false;
  for (const long_chord& lc : lspan) primed = primed || (lc.s < c.jp && lc.t > c.ip);

  if (!primed) {
    // no chord spans the two inner windows: each end segment up to its
    // nearer chord closes a fundamental cycle of its own
    auto c1 = chordless_cycle_formed_by(g, span(p, 1, c.jp));
    auto c2 = chordless_cycle_formed_by(g, span(p, c.ip, n));
    if (!c1 || !c2) return gap_out(std::move(att), "Case2.Sub1:expected end-segment cycles");
    edge_set pool1 = path_edge_set(p.order());
    pool1.insert(edge(p.v(1), p.v(c.jp)));
    pool1.insert(edge(p.v(c.ip), p.v(n)));
    att.kind = outcome::plan_ready;
    att.plan = assemble_plan(g, {c1->vertices, c2->vertices}, pool1);
    att.branch = "Case2.Sub1";
    return att;
  }

  if (lspan.size() >= 2) {
    // two spanning chords with minimal combined end separation bound a
    // four-corner frame
    using pair_key = std::tuple<int, int, int, int, int>;
    pair_key best_key{};
    int bs1 = -1, bs2 = -1;
    for (int x = 0; x < static_cast<int>(lspan.size()); ++x) {
      for (int y = x + 1; y < static_cast<int>(lspan.size()); ++y) {
        int sep = std::abs(lspan[x].s - lspan[y].s) + std::abs(lspan[x].t - lspan[y].t);
        pair_key key{sep, std::min(lspan[x].s, lspan[y].s), std::max(lspan[x].s, lspan[y].s),
                     std::min(lspan[x].t, lspan[y].t), std::max(lspan[x].t, lspan[y].t)};
        if (bs1 < 0 || key < best_key) {
          best_key = key;
          bs1 = x;
          bs2 = y;
        }
      }
    }
    const long_chord e1 = lspan[bs1], e2 = lspan[bs2];
    const int gg = std::min(e1.s, e2.s);
    const int hh = std::max(e1.s, e2.s);
    const int ff = e1.s == gg ? e1.t : e2.t;  // partner of g
    const int ee = e1.s == hh ? e1.t : e2.t;  // partner of h
    att.witnesses["g"] = std::to_string(gg);
    att.witnesses["h"] = std::to_string(hh);
    att.witnesses["e"] = std::to_string(ee);
    att.witnesses["f"] = std::to_string(ff);

    std::vector<int> left = span(p, gg, hh);
    std::vector<int> right = span(p, ee, ff);
    auto cycs_left = cycles_formed_by(g, left);
    auto cycs_right = cycles_formed_by(g, right);

    if (cycs_left.empty() && cycs_right.empty()) {
      // both chord-到-chord segments are cycle-free: the two segments plus
      // the two chords close a single four-corner cycle
      std::vector<int> cyc = left;
      append(cyc, right);
      att.kind = outcome::plan_ready;
      att.plan = assemble_plan(g, {cyc}, pool);
      att.branch = "Case2.Sub2.a";
      return att;
    }

    if (!cycs_left.empty() && !cycs_right.empty()) {
      if (!cycs_left.front().chordless || !cycs_right.front().chordless)
        return gap_out(std::move(att), "Case2.Sub2.c:shortest formed cycle has a chord");
      att.kind = outcome::plan_ready;
      att.plan =
          assemble_plan(g, {cycs_left.front().vertices, cycs_right.front().vertices}, pool);
      att.branch = "Case2.Sub2.c";
      return att;
    }

    // exactly one segment carries cycles; orient it so the companion walk
    // ends where the other segment starts
    const bool cycle_right = !cycs_right.empty();
    std::vector<int> seg = cycle_right ? right : span(p, hh, gg);
    std::vector<int> other = cycle_right ? left : span(p, ff, ee);
    std::vector<int> region = cycle_right ? span(p, 1, c.j) : span(p, c.i, n);
    auto cycs_seg = cycle_right ? std::move(cycs_right) : cycles_formed_by(g, seg);
    if (!cycle_right) att.via.push_back("SwappedGHEF");

    std::vector<char> in_region(g.order(), 0);
    for (int v : region) in_region[v] = 1;
    const formed_cycle* iso = nullptr;
    for (const auto& fc : cycs_seg) {
      bool leaks = false;
      for (int v : fc.vertices)
        for (int w : g.neighbors(v)) leaks = leaks || in_region[w];
      if (!leaks) {
        iso = &fc;
        break;
      }
    }

    if (iso != nullptr) {
      // a segment cycle with no edge toward the far end pairs with the
      // fundamental cycle of that end segment
      if (!iso->chordless)
        return gap_out(std::move(att), "Case2.Sub2.b:smallest isolated cycle has a chord");
      auto c2 = chordless_cycle_formed_by(g, region);
      if (!c2) return gap_out(std::move(att), "Case2.Sub2.b:expected end-segment cycle");
      att.kind = outcome::plan_ready;
      att.plan = assemble_plan(g, {iso->vertices, c2->vertices}, pool);
      att.branch = "Case2.Sub2.b.Iso";
      return att;
    }

    // every segment cycle leaks toward the far end: shortest monotone jump
    // walk across the segment, skipped runs rejoin the tree outside it
    std::vector<int> mono = monotone_path_indices(g, seg);
    std::vector<int> cyc;
    for (int idx : mono) cyc.push_back(seg[idx]);
    append(cyc, other);
    std::vector<leftover_run> runs;
    try {
      runs = leftover_segments(g, seg, mono, seg);
    } catch (const missing_connector&) {
      return gap_out(std::move(att), "Case2.Sub2.b.Mono:leftover run has no outside edge");
    }
    att.kind = outcome::plan_ready;
    att.plan = assemble_plan(g, {cyc}, pool, run_connectors(runs));
    att.branch = "Case2.Sub2.b.Mono";
    return att;
  }

  // exactly one spanning chord (s, t)
  const long_chord lc = lspan.front();
  att.witnesses["s"] = std::to_string(lc.s);
  att.witnesses["t"] = std::to_string(lc.t);
  if (!(lc.s < c.jp && lc.t > c.ip))
    return gap_out(std::move(att), "Case2.Sub3:single spanning chord misses an inner window");

  auto cyc_near = chordless_cycle_formed_by(g, span(p, lc.s + 1, c.j));
  if (cyc_near) {
    auto c2 = chordless_cycle_formed_by(g, span(p, c.i, n));
    if (!c2) return gap_out(std::move(att), "Case2.Sub3:expected far-end cycle");
    att.kind = outcome::plan_ready;
    att.plan = assemble_plan(g, {cyc_near->vertices, c2->vertices}, pool);
    att.branch = "Case2.Sub3.TwoCycles";
    return att;
  }

  auto mirror = [&]() -> case_attempt {
    if (!allow_mirror) return gap_out(std::move(att), "Case2.Sub3:mirror loop");
    case_attempt m = case2_impl(g, p.reversed(g), maximality_ok, false);
    m.via.insert(m.via.begin(), "Mirrored");
    return m;
  };

  if (chordless_cycle_formed_by(g, span(p, c.i, lc.t - 1))) return mirror();

  if (lc.s == c.jp - 1 && lc.t == c.ip + 1) {
    // the spanning chord sits tight against both inner chords: splicing all
    // four chords into the path closes a Hamiltonian cycle
    att.kind = outcome::ham_cycle;
    att.cycle = span(p, 1, lc.s);
    append(att.cycle, span(p, lc.t, n));
    append(att.cycle, span(p, c.ip, c.jp));
    att.via.push_back("Case2.Sub3.Ham");
    return att;
  }
  if (lc.s == c.jp - 1) return mirror();

  // rewire around the third neighbor of the vertex just before the inner
  // chord landing
  if (c.jp - 1 < 2) return gap_out(std::move(att), "Case2.Sub3:no interior rewire vertex");
  const int w = p.v(c.jp - 1);
  const int k = p.pos(g.third_neighbor(w, p.v(c.jp - 2), p.v(c.jp)));
  att.witnesses["k"] = std::to_string(k);

  if (k < c.jp - 1) {
    // rerouting the head through the chord at k yields a Hamiltonian path
    // with a strictly wider inner window, contradicting gap-maximality
    if (!maximality_ok)
      return gap_out(std::move(att), "Case2.Sub3:rewire requires a gap-maximal path");
    std::vector<int> order = span(p, k + 1, c.jp - 1);
    append(order, span(p, k, 1));
    append(order, span(p, c.jp, n));
    try {
      att.replacement.emplace(g, std::move(order));
    } catch (const std::exception& e) {
      return gap_out(std::move(att), std::string("Case2.Sub3:rewired order is not a path: ") + e.what());
    }
    att.kind = outcome::replacement_path;
    att.via.push_back("Case2.Sub3.MaximalityViolation");
    return att;
  }

  if (!(k > c.j && k < c.i))
    return gap_out(std::move(att), "Case2.Sub3:rewire chord lands outside the middle");

  // both inner chords close short cycles at the ends; the spanning chord and
  // the rewire chord keep the middle connected to both ends
  std::vector<int> c1{p.v(1)};
  append(c1, span(p, c.jp, c.j));
  std::vector<int> c2{p.v(n)};
  append(c2, span(p, c.i, c.ip));
  edge_set pool3 = path_edge_set(p.order());
  pool3.insert(edge(p.v(lc.s), p.v(lc.t)));
  pool3.insert(edge(p.v(k), w));
  att.kind = outcome::plan_ready;
  att.plan = assemble_plan(g, {c1, c2}, pool3);
  att.branch = "Case2.Sub3.Rewire";
  return att;
}

}  // namespace

case_attempt case2(const cubic_graph& g, const ham_path& p, bool maximality_ok) {
  return case2_impl(g, p, maximality_ok, true);
}

const char* to_string(decompose_status s) {
  switch (s) {
    case decompose_status::ok: return "ok";
    case decompose_status::not_traceable: return "not_traceable";
    case decompose_status::oracle_exhausted: return "oracle_exhausted";
    case decompose_status::case2_refused: return "case2_refused";
  }
  return "unknown";
}

namespace {

constexpr int kCase2Retries = 32;

struct gap_sink {
  std::vector<std::string> gaps;

  void record(const std::string& reason) { gaps.push_back(reason); }
  void record_attempt(const case_attempt& att) {
    gaps.push_back(att.gap_reason.empty() ? "unspecified gap" : att.gap_reason);
  }
  decompose_output finalize(decompose_output o) const {
    o.trace.gap_details.insert(o.trace.gap_details.begin(), gaps.begin(), gaps.end());
    o.trace.proof_gaps = static_cast<int>(o.trace.gap_details.size());
    return o;
  }
};

// best-first bounded pool of Disjoint paths: widest inner window first,
// lexicographically smallest order on ties
struct candidate_pool {
  std::vector<std::pair<ham_path, int>> items;

  void push(const ham_path& p, int gap_width) {
    items.emplace_back(p, gap_width);
    std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
      if (x.second != y.second) return x.second > y.second;
      return x.first.order() < y.first.order();
    });
    if (static_cast<int>(items.size()) > kCase2Retries) items.pop_back();
  }
};

decompose_output oracle_rescue(const cubic_graph& g, const decompose_options& opts,
                               const char* branch) {
  oracle_result r = brute_force_decompose(g, opts.oracle_budget);
  decompose_output o;
  o.trace.branch = branch;
  if (r.found) {
    o.status = decompose_status::ok;
    o.dec = r.dec;
  } else {
    o.status = decompose_status::oracle_exhausted;
  }
  return o;
}

bool try_apply(const cubic_graph& g, const case_attempt& att, const ham_path* used,
               gap_sink& sink, decompose_output& out, std::vector<std::string> via_prefix = {}) {
  try {
    decomposition dec = apply_plan(g, att.plan);
    out.status = decompose_status::ok;
    out.dec = std::move(dec);
    out.trace.branch = att.branch;
    out.trace.via = std::move(via_prefix);
    out.trace.via.insert(out.trace.via.end(), att.via.begin(), att.via.end());
    out.trace.witnesses = att.witnesses;
    if (used != nullptr) out.trace.path = used->order();
    return true;
  } catch (const plan_invalid& e) {
    sink.record("PlanRejected:" + e.check + ":" + att.branch);
    return false;
  }
}

}  // namespace

decompose_output hamiltonian_fallback(const cubic_graph& g, const std::vector<int>& cycle,
                                      bool reentry, const decompose_options& opts) {
  const int n = g.order();
  const bool guard = n > opts.case2_bound && !opts.force;
  const std::uint64_t cap = guard ? opts.scan_cap : 0;

  gap_sink sink;
  decompose_output out;
  bool done = false;

  if (reentry && static_cast<int>(cycle.size()) == n) {
    // rung 1: rotate the known cycle and rescan the path space for a path
    // with non-adjacent endpoints that one of the case constructions accepts
    std::set<std::vector<int>> tried;
    candidate_pool disjoint;

    auto consider = [&](const ham_path& q) {
      if (done) return;
      if (!tried.insert(q.order()).second) return;
      path_class cls = chord_indices(g, q);
      if (cls.kind == path_kind::overlapping) {
        case_attempt att = case1(g, q);
        if (att.kind == outcome::plan_ready) {
          done = try_apply(g, att, &q, sink, out, {"HamiltonianFallback.Rotation"});
        } else if (att.kind == outcome::gap) {
          sink.record_attempt(att);
        }
        // nested cycle or replacement outcomes are skipped: the fallback is
        // already the landing spot for those
      } else if (cls.kind == path_kind::disjoint) {
        disjoint.push(q, cls.chords->gap());
      }
    };

    for (int k = 0; k < n && !done; ++k) {
      std::vector<int> base(n);
      for (int r = 0; r < n; ++r) base[r] = cycle[(k + 1 + r) % n];
      for (int flip = 0; flip < 2 && !done; ++flip) {
        if (flip == 1) std::reverse(base.begin(), base.end());
        const int tail = base[n - 1];
        const int chord = g.third_neighbor(tail, base[n - 2], base[0]);
        const int x = static_cast<int>(std::find(base.begin(), base.end(), chord) - base.begin());
        std::vector<int> rotated(base.begin(), base.begin() + x + 1);
        append(rotated, reversed_tail(base, x + 1));
        if (rotated.front() > rotated.back()) std::reverse(rotated.begin(), rotated.end());
        try {
          consider(ham_path(g, std::move(rotated)));
        } catch (const std::exception&) {
          // a malformed rotation candidate is dropped, not fatal
        }
      }
    }

    if (!done) {
      std::uint64_t seen = 0;
      enumerate_ham_paths(g, [&](const ham_path& q) {
        ++seen;
        consider(q);
        if (done) return false;
        return cap == 0 || seen < cap;
      });
    }

    for (const auto& [q, width] : disjoint.items) {
      (void)width;
      if (done) break;
      case_attempt att = case2(g, q, false);
      if (att.kind == outcome::plan_ready)
        done = try_apply(g, att, &q, sink, out, {"HamiltonianFallback.Rotation"});
      else if (att.kind == outcome::gap)
        sink.record_attempt(att);
    }
  }

  if (!done && n == 4) {
    // the unique cubic graph on four vertices: one tree vertex, one triangle
    partition_plan plan;
    plan.tree_vertices = {0};
    plan.cycles = {{1, 2, 3}};
    case_attempt att;
    att.kind = outcome::plan_ready;
    att.plan = plan;
    att.branch = "HamiltonianFallback.K4";
    done = try_apply(g, att, nullptr, sink, out);
  }

  if (!done) out = oracle_rescue(g, opts, "HamiltonianFallback.Oracle");
  return sink.finalize(std::move(out));
}

decompose_output decompose(const cubic_graph& g, const decompose_options& opts) {
  const int n = g.order();
  const bool guard = n > opts.case2_bound && !opts.force;
  const std::uint64_t cap = guard ? opts.scan_cap : 0;

  gap_sink sink;
  candidate_pool disjoint;
  std::optional<std::vector<int>> remembered;
  decompose_output out;
  bool done = false;
  bool saw_overlapping = false;
  bool truncated = false;
  bool any_path = false;
  std::uint64_t seen = 0;

  auto run_fallback = [&](const std::vector<int>& cyc, bool reentry, const case_attempt* src) {
    out = hamiltonian_fallback(g, cyc, reentry, opts);
    if (src != nullptr) {
      out.trace.via.insert(out.trace.via.begin(), src->via.begin(), src->via.end());
      out.trace.witnesses.insert(src->witnesses.begin(), src->witnesses.end());
    }
    done = true;
  };

  enumerate_ham_paths(g, [&](const ham_path& p) {
    any_path = true;
    ++seen;
    path_class cls = chord_indices(g, p);
    if (cls.kind == path_kind::hamiltonian_endpoints) {
      if (!saw_overlapping) {
        run_fallback(p.order(), true, nullptr);
        return false;
      }
      if (!remembered) remembered = p.order();
    } else if (cls.kind == path_kind::overlapping) {
      saw_overlapping = true;
      case_attempt att = case1(g, p);
      if (att.kind == outcome::plan_ready) {
        if (try_apply(g, att, &p, sink, out)) {
          done = true;
          return false;
        }
      } else if (att.kind == outcome::ham_cycle) {
        run_fallback(att.cycle, true, &att);
        return false;
      } else {
        sink.record_attempt(att);
      }
    } else {
      disjoint.push(p, cls.chords->gap());
    }
    if (cap != 0 && seen >= cap) {
      truncated = true;
      return false;
    }
    return true;
  });

  if (done) return sink.finalize(std::move(out));

  if (!any_path) {
    out.status = decompose_status::not_traceable;
    out.trace.branch = "NotTraceable";
    return sink.finalize(std::move(out));
  }

  if (!saw_overlapping && !remembered) {
    // every enumerated path has disjoint chords
    if (truncated) {
      // the scan stopped early, so the all-paths premise is unverified
      out.status = decompose_status::case2_refused;
      out.trace.branch = "Case2Refused";
      return sink.finalize(std::move(out));
    }
    bool replacement_routed = false;
    for (const auto& [p, width] : disjoint.items) {
      (void)width;
      case_attempt att = case2(g, p, true);
      if (att.kind == outcome::plan_ready) {
        if (try_apply(g, att, &p, sink, out)) return sink.finalize(std::move(out));
        continue;
      }
      if (att.kind == outcome::ham_cycle) {
        run_fallback(att.cycle, false, &att);
        return sink.finalize(std::move(out));
      }
      if (att.kind == outcome::replacement_path) {
        sink.record("Case2.Sub3:replacement path on a gap-maximal selection");
        if (replacement_routed || !att.replacement) continue;
        replacement_routed = true;
        const ham_path rp = *att.replacement;
        path_class rc = chord_indices(g, rp);
        if (rc.kind == path_kind::hamiltonian_endpoints) {
          run_fallback(rp.order(), true, &att);
          return sink.finalize(std::move(out));
        }
        case_attempt att2 = rc.kind == path_kind::overlapping ? case1(g, rp) : case2(g, rp, true);
        if (att2.kind == outcome::plan_ready) {
          if (try_apply(g, att2, &rp, sink, out, att.via)) return sink.finalize(std::move(out));
        } else if (att2.kind == outcome::ham_cycle) {
          run_fallback(att2.cycle, false, &att2);
          return sink.finalize(std::move(out));
        } else {
          sink.record_attempt(att2);
        }
        continue;
      }
      sink.record_attempt(att);
    }
    return sink.finalize(oracle_rescue(g, opts, "ProofGap.Oracle"));
  }

  if (remembered) {
    run_fallback(*remembered, true, nullptr);
    return sink.finalize(std::move(out));
  }

  return sink.finalize(oracle_rescue(g, opts, "ProofGap.Oracle"));
}

}  // namespace cubicdec
